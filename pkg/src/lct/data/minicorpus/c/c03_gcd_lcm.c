#include <stdio.h>

long long greatest_common_divisor(long long first_operand, long long second_operand) {
    while (second_operand != 0) {
        long long remainder_value = first_operand % second_operand;
        first_operand = second_operand;
        second_operand = remainder_value;
    }
    return first_operand;
}

long long least_common_multiple(long long first_operand, long long second_operand) {
    return first_operand / greatest_common_divisor(first_operand, second_operand) * second_operand;
}

int main(void) {
    int test_case_count;
    scanf("%d", &test_case_count);
    while (test_case_count--) {
        long long numerator_input, denominator_input;
        scanf("%lld %lld", &numerator_input, &denominator_input);
        long long common_divisor_result = greatest_common_divisor(numerator_input, denominator_input);
        printf("%lld %lld\n", common_divisor_result, least_common_multiple(numerator_input, denominator_input));
    }
    return 0;
}
