#include <stdio.h>
#include <stdlib.h>

long long *build_prefix_sum_table(const int *input_values, int number_of_elements) {
    long long *prefix_sum_table = malloc(sizeof(long long) * (number_of_elements + 1));
    prefix_sum_table[0] = 0;
    for (int current_index = 0; current_index < number_of_elements; current_index++) {
        prefix_sum_table[current_index + 1] = prefix_sum_table[current_index] + input_values[current_index];
    }
    return prefix_sum_table;
}

int main(void) {
    int number_of_elements, number_of_queries;
    scanf("%d %d", &number_of_elements, &number_of_queries);
    int *input_values = malloc(sizeof(int) * number_of_elements);
    for (int read_index = 0; read_index < number_of_elements; read_index++) {
        scanf("%d", &input_values[read_index]);
    }
    long long *prefix_sum_table = build_prefix_sum_table(input_values, number_of_elements);
    while (number_of_queries--) {
        int left_boundary, right_boundary;
        scanf("%d %d", &left_boundary, &right_boundary);
        printf("%lld\n", prefix_sum_table[right_boundary] - prefix_sum_table[left_boundary - 1]);
    }
    free(prefix_sum_table);
    free(input_values);
    return 0;
}
