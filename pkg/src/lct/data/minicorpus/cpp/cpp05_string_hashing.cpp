#include <bits/stdc++.h>
using namespace std;

const unsigned long long POLYNOMIAL_BASE_VALUE = 131;

vector<unsigned long long> compute_prefix_hashes(const string &input_text, vector<unsigned long long> &base_power_table) {
    int text_length = input_text.size();
    vector<unsigned long long> prefix_hash_values(text_length + 1, 0);
    base_power_table.assign(text_length + 1, 1);
    for (int character_position = 0; character_position < text_length; character_position++) {
        prefix_hash_values[character_position + 1] = prefix_hash_values[character_position] * POLYNOMIAL_BASE_VALUE + input_text[character_position];
        base_power_table[character_position + 1] = base_power_table[character_position] * POLYNOMIAL_BASE_VALUE;
    }
    return prefix_hash_values;
}

unsigned long long substring_hash_value(const vector<unsigned long long> &prefix_hash_values, const vector<unsigned long long> &base_power_table, int substring_start, int substring_length) {
    return prefix_hash_values[substring_start + substring_length] - prefix_hash_values[substring_start] * base_power_table[substring_length];
}

int main() {
    string input_text;
    int query_count;
    cin >> input_text >> query_count;
    vector<unsigned long long> base_power_table;
    vector<unsigned long long> prefix_hash_values = compute_prefix_hashes(input_text, base_power_table);
    while (query_count--) {
        int first_start, second_start, compared_length;
        cin >> first_start >> second_start >> compared_length;
        bool substrings_match = substring_hash_value(prefix_hash_values, base_power_table, first_start, compared_length) ==
                                substring_hash_value(prefix_hash_values, base_power_table, second_start, compared_length);
        cout << (substrings_match ? "Yes" : "No") << "\n";
    }
}
