#include <bits/stdc++.h>
using namespace std;

const int MODULUS_VALUE = 1000000007;

int count_grid_paths_avoiding_walls(const vector<string> &grid_layout_rows) {
    int grid_height = grid_layout_rows.size();
    int grid_width = grid_layout_rows[0].size();
    vector<vector<int>> path_count_table(grid_height, vector<int>(grid_width, 0));
    path_count_table[0][0] = grid_layout_rows[0][0] == '.' ? 1 : 0;
    for (int row_coordinate = 0; row_coordinate < grid_height; row_coordinate++) {
        for (int column_coordinate = 0; column_coordinate < grid_width; column_coordinate++) {
            if (grid_layout_rows[row_coordinate][column_coordinate] == '#') {
                path_count_table[row_coordinate][column_coordinate] = 0;
                continue;
            }
            if (row_coordinate > 0)
                path_count_table[row_coordinate][column_coordinate] = (path_count_table[row_coordinate][column_coordinate] + path_count_table[row_coordinate - 1][column_coordinate]) % MODULUS_VALUE;
            if (column_coordinate > 0)
                path_count_table[row_coordinate][column_coordinate] = (path_count_table[row_coordinate][column_coordinate] + path_count_table[row_coordinate][column_coordinate - 1]) % MODULUS_VALUE;
        }
    }
    return path_count_table[grid_height - 1][grid_width - 1];
}

int main() {
    int grid_height, grid_width;
    cin >> grid_height >> grid_width;
    vector<string> grid_layout_rows(grid_height);
    for (auto &single_layout_row : grid_layout_rows) cin >> single_layout_row;
    cout << count_grid_paths_avoiding_walls(grid_layout_rows) << "\n";
}
