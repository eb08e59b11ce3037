#include <bits/stdc++.h>
using namespace std;

vector<long long> segment_tree_nodes;
int leaf_capacity_count;

void point_update_value(int updated_position, long long replacement_value) {
    int tree_position = updated_position + leaf_capacity_count;
    segment_tree_nodes[tree_position] = replacement_value;
    for (tree_position /= 2; tree_position >= 1; tree_position /= 2)
        segment_tree_nodes[tree_position] = segment_tree_nodes[2 * tree_position] + segment_tree_nodes[2 * tree_position + 1];
}

long long range_sum_query(int query_left_bound, int query_right_bound) {
    long long accumulated_range_sum = 0;
    for (query_left_bound += leaf_capacity_count, query_right_bound += leaf_capacity_count + 1;
         query_left_bound < query_right_bound; query_left_bound /= 2, query_right_bound /= 2) {
        if (query_left_bound & 1) accumulated_range_sum += segment_tree_nodes[query_left_bound++];
        if (query_right_bound & 1) accumulated_range_sum += segment_tree_nodes[--query_right_bound];
    }
    return accumulated_range_sum;
}

int main() {
    ios::sync_with_stdio(false);
    cin.tie(nullptr);
    int element_total, operation_total;
    cin >> element_total >> operation_total;
    leaf_capacity_count = 1;
    while (leaf_capacity_count < element_total) leaf_capacity_count *= 2;
    segment_tree_nodes.assign(2 * leaf_capacity_count, 0);
    for (int initial_position = 0; initial_position < element_total; initial_position++) {
        long long initial_value;
        cin >> initial_value;
        point_update_value(initial_position, initial_value);
    }
    while (operation_total--) {
        int operation_kind, first_argument, second_argument;
        cin >> operation_kind >> first_argument >> second_argument;
        if (operation_kind == 1) point_update_value(first_argument - 1, second_argument);
        else cout << range_sum_query(first_argument - 1, second_argument - 1) << "\n";
    }
    return 0;
}
