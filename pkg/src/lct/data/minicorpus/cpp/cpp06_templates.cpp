#include <iostream>
#include <vector>

template <typename ElementType>
ElementType maximum_of_sequence(const std::vector<ElementType> &input_sequence, ElementType default_result_value = ElementType()) {
    if (input_sequence.empty()) return default_result_value;
    ElementType running_maximum = input_sequence[0];
    for (const ElementType &candidate_element : input_sequence)
        if (candidate_element > running_maximum) running_maximum = candidate_element;
    return running_maximum;
}

int count_strictly_increasing_runs(const std::vector<int> &observed_measurements) {
    int completed_run_count = 0;
    int current_run_length = 1;
    for (size_t measurement_index = 1; measurement_index < observed_measurements.size(); measurement_index++) {
        if (observed_measurements[measurement_index] > observed_measurements[measurement_index - 1]) {
            current_run_length++;
        } else {
            if (current_run_length > 1) completed_run_count++;
            current_run_length = 1;
        }
    }
    if (current_run_length > 1) completed_run_count++;
    return completed_run_count;
}

int main() {
    int measurement_total;
    std::cin >> measurement_total;
    std::vector<int> observed_measurements(measurement_total);
    for (int &single_measurement : observed_measurements) std::cin >> single_measurement;
    std::cout << maximum_of_sequence(observed_measurements) << " " << count_strictly_increasing_runs(observed_measurements) << "\n";
}
