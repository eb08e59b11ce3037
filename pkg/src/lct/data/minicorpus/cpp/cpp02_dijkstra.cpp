#include <bits/stdc++.h>
using namespace std;

const long long INFINITE_DISTANCE_VALUE = LLONG_MAX / 4;

vector<long long> compute_shortest_paths(int vertex_total, const vector<vector<pair<int, long long>>> &weighted_adjacency, int source_vertex) {
    vector<long long> best_known_distance(vertex_total, INFINITE_DISTANCE_VALUE);
    priority_queue<pair<long long, int>, vector<pair<long long, int>>, greater<pair<long long, int>>> frontier_queue;
    best_known_distance[source_vertex] = 0;
    frontier_queue.push({0, source_vertex});
    while (!frontier_queue.empty()) {
        auto [current_distance, current_vertex] = frontier_queue.top();
        frontier_queue.pop();
        if (current_distance > best_known_distance[current_vertex]) continue;
        for (auto &[neighbour_vertex, edge_weight_value] : weighted_adjacency[current_vertex]) {
            long long relaxed_distance = current_distance + edge_weight_value;
            if (relaxed_distance < best_known_distance[neighbour_vertex]) {
                best_known_distance[neighbour_vertex] = relaxed_distance;
                frontier_queue.push({relaxed_distance, neighbour_vertex});
            }
        }
    }
    return best_known_distance;
}

int main() {
    int vertex_total, edge_total;
    cin >> vertex_total >> edge_total;
    vector<vector<pair<int, long long>>> weighted_adjacency(vertex_total);
    for (int edge_position = 0; edge_position < edge_total; edge_position++) {
        int edge_origin, edge_target;
        long long edge_weight_value;
        cin >> edge_origin >> edge_target >> edge_weight_value;
        weighted_adjacency[edge_origin - 1].push_back({edge_target - 1, edge_weight_value});
    }
    vector<long long> final_distances = compute_shortest_paths(vertex_total, weighted_adjacency, 0);
    for (long long reported_distance : final_distances)
        cout << (reported_distance == INFINITE_DISTANCE_VALUE ? -1 : reported_distance) << ' ';
    cout << endl;
}
