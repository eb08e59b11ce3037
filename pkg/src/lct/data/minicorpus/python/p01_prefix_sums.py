import sys


def build_prefix_sum_table(input_values):
    prefix_sum_table = [0] * (len(input_values) + 1)
    for current_index, current_value in enumerate(input_values):
        prefix_sum_table[current_index + 1] = prefix_sum_table[current_index] + current_value
    return prefix_sum_table


def answer_range_queries(prefix_sum_table, query_ranges):
    query_answers = []
    for left_boundary, right_boundary in query_ranges:
        query_answers.append(prefix_sum_table[right_boundary] - prefix_sum_table[left_boundary - 1])
    return query_answers


def main():
    data = sys.stdin.read().split()
    number_of_elements, number_of_queries = int(data[0]), int(data[1])
    input_values = list(map(int, data[2:2 + number_of_elements]))
    query_ranges = []
    read_position = 2 + number_of_elements
    for _ in range(number_of_queries):
        query_ranges.append((int(data[read_position]), int(data[read_position + 1])))
        read_position += 2
    prefix_sum_table = build_prefix_sum_table(input_values)
    print("\n".join(map(str, answer_range_queries(prefix_sum_table, query_ranges))))


if __name__ == "__main__":
    main()
