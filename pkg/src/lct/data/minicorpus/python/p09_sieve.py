def generate_prime_sieve(upper_limit_value):
    is_prime_flags = [True] * (upper_limit_value + 1)
    is_prime_flags[0] = False
    if upper_limit_value >= 1:
        is_prime_flags[1] = False
    candidate_divisor = 2
    while candidate_divisor * candidate_divisor <= upper_limit_value:
        if is_prime_flags[candidate_divisor]:
            for composite_number in range(candidate_divisor * candidate_divisor, upper_limit_value + 1, candidate_divisor):
                is_prime_flags[composite_number] = False
        candidate_divisor += 1
    return is_prime_flags


def count_twin_prime_pairs(is_prime_flags):
    twin_pair_counter = 0
    for lower_twin_candidate in range(2, len(is_prime_flags) - 2):
        if is_prime_flags[lower_twin_candidate] and is_prime_flags[lower_twin_candidate + 2]:
            twin_pair_counter += 1
    return twin_pair_counter


upper_limit_value = int(input())
print(count_twin_prime_pairs(generate_prime_sieve(upper_limit_value)))
