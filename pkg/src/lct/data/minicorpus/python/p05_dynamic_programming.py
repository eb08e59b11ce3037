import sys

MODULO_CONSTANT = 10 ** 9 + 7


def count_staircase_climbing_ways(total_stair_count, allowed_step_sizes):
    ways_to_reach_stair = [0] * (total_stair_count + 1)
    ways_to_reach_stair[0] = 1
    for stair_position in range(1, total_stair_count + 1):
        accumulated_ways = 0
        for step_size_option in allowed_step_sizes:
            if step_size_option <= stair_position:
                accumulated_ways += ways_to_reach_stair[stair_position - step_size_option]
        ways_to_reach_stair[stair_position] = accumulated_ways % MODULO_CONSTANT
    return ways_to_reach_stair[total_stair_count]


def read_problem_input():
    tokens_from_input = sys.stdin.read().split()
    total_stair_count = int(tokens_from_input[0])
    allowed_step_sizes = [int(token_value) for token_value in tokens_from_input[1:]]
    return total_stair_count, allowed_step_sizes


total_stair_count, allowed_step_sizes = read_problem_input()
print(count_staircase_climbing_ways(total_stair_count, allowed_step_sizes))
