#include <stdio.h>

void swap_integer_values(int *first_value_pointer, int *second_value_pointer) {
    int temporary_holder = *first_value_pointer;
    *first_value_pointer = *second_value_pointer;
    *second_value_pointer = temporary_holder;
}

int bubble_sort_counting_swaps(int sortable_array[], int array_length) {
    int total_swap_counter = 0;
    for (int outer_pass = 0; outer_pass < array_length - 1; outer_pass++) {
        for (int inner_position = 0; inner_position < array_length - 1 - outer_pass; inner_position++) {
            if (sortable_array[inner_position] > sortable_array[inner_position + 1]) {
                swap_integer_values(&sortable_array[inner_position], &sortable_array[inner_position + 1]);
                total_swap_counter++;
            }
        }
    }
    return total_swap_counter;
}

int main(void) {
    int array_length;
    int sortable_array[1000];
    scanf("%d", &array_length);
    for (int input_position = 0; input_position < array_length; input_position++)
        scanf("%d", &sortable_array[input_position]);
    printf("%d\n", bubble_sort_counting_swaps(sortable_array, array_length));
    return 0;
}
