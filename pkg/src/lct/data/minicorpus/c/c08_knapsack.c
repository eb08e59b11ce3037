#include <stdio.h>

int maximum_integer_value(int first_candidate, int second_candidate) {
    return first_candidate > second_candidate ? first_candidate : second_candidate;
}

int best_achievable_value[10001];

int main(void) {
    int item_count, knapsack_capacity;
    scanf("%d %d", &item_count, &knapsack_capacity);
    for (int item_position = 0; item_position < item_count; item_position++) {
        int item_weight_value, item_profit_value;
        scanf("%d %d", &item_weight_value, &item_profit_value);
        for (int remaining_capacity = knapsack_capacity; remaining_capacity >= item_weight_value; remaining_capacity--) {
            best_achievable_value[remaining_capacity] = maximum_integer_value(
                best_achievable_value[remaining_capacity],
                best_achievable_value[remaining_capacity - item_weight_value] + item_profit_value);
        }
    }
    printf("%d\n", best_achievable_value[knapsack_capacity]);
    return 0;
}
