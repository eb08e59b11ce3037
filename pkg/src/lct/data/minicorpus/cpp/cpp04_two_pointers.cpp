#include <bits/stdc++.h>
using namespace std;

int longest_subarray_within_budget(const vector<int> &element_costs, long long spending_limit) {
    int best_window_length = 0;
    long long window_cost_total = 0;
    int window_start_index = 0;
    for (int window_end_index = 0; window_end_index < (int)element_costs.size(); window_end_index++) {
        window_cost_total += element_costs[window_end_index];
        while (window_cost_total > spending_limit) {
            window_cost_total -= element_costs[window_start_index];
            window_start_index++;
        }
        best_window_length = max(best_window_length, window_end_index - window_start_index + 1);
    }
    return best_window_length;
}

int main() {
    int element_count;
    long long spending_limit;
    cin >> element_count >> spending_limit;
    vector<int> element_costs(element_count);
    for (auto &single_cost_value : element_costs) cin >> single_cost_value;
    cout << longest_subarray_within_budget(element_costs, spending_limit) << '\n';
    return 0;
}
