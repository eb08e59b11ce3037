def count_values_not_exceeding(sorted_sequence, threshold_value):
    lower_pointer, upper_pointer = 0, len(sorted_sequence)
    while lower_pointer < upper_pointer:
        middle_pointer = (lower_pointer + upper_pointer) // 2
        if sorted_sequence[middle_pointer] <= threshold_value:
            lower_pointer = middle_pointer + 1
        else:
            upper_pointer = middle_pointer
    return lower_pointer


def process_all_requests():
    total_shops = int(input())
    shop_price_list = sorted(map(int, input().split()))
    total_days = int(input())
    daily_budget_results = []
    for _ in range(total_days):
        available_budget = int(input())
        daily_budget_results.append(count_values_not_exceeding(shop_price_list, available_budget))
    assert len(shop_price_list) == total_shops
    print("\n".join(map(str, daily_budget_results)))


process_all_requests()
