#include <stdio.h>
#include <stdlib.h>

int compare_integers_ascending(const void *left_element_pointer, const void *right_element_pointer) {
    int left_element_value = *(const int *)left_element_pointer;
    int right_element_value = *(const int *)right_element_pointer;
    return (left_element_value > right_element_value) - (left_element_value < right_element_value);
}

int lower_bound_position(const int *sorted_values, int values_length, int searched_value) {
    int low_boundary = 0, high_boundary = values_length;
    while (low_boundary < high_boundary) {
        int middle_position = low_boundary + (high_boundary - low_boundary) / 2;
        if (sorted_values[middle_position] < searched_value)
            low_boundary = middle_position + 1;
        else
            high_boundary = middle_position;
    }
    return low_boundary;
}

int main(void) {
    int values_length, query_total;
    scanf("%d %d", &values_length, &query_total);
    int *sorted_values = malloc(sizeof(int) * values_length);
    for (int fill_position = 0; fill_position < values_length; fill_position++) scanf("%d", &sorted_values[fill_position]);
    qsort(sorted_values, values_length, sizeof(int), compare_integers_ascending);
    while (query_total--) {
        int searched_value;
        scanf("%d", &searched_value);
        printf("%d\n", lower_bound_position(sorted_values, values_length, searched_value));
    }
    free(sorted_values);
    return 0;
}
