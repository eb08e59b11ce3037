#include <stdio.h>
#include <math.h>

struct cartesian_point {
    double horizontal_coordinate;
    double vertical_coordinate;
};

double euclidean_distance_between(struct cartesian_point first_location, struct cartesian_point second_location) {
    double horizontal_difference = first_location.horizontal_coordinate - second_location.horizontal_coordinate;
    double vertical_difference = first_location.vertical_coordinate - second_location.vertical_coordinate;
    return sqrt(horizontal_difference * horizontal_difference + vertical_difference * vertical_difference);
}

int main(void) {
    int number_of_points;
    struct cartesian_point collected_points[200];
    scanf("%d", &number_of_points);
    for (int point_index = 0; point_index < number_of_points; point_index++) {
        scanf("%lf %lf", &collected_points[point_index].horizontal_coordinate,
              &collected_points[point_index].vertical_coordinate);
    }
    double longest_observed_distance = 0.0;
    for (int first_index = 0; first_index < number_of_points; first_index++) {
        for (int second_index = first_index + 1; second_index < number_of_points; second_index++) {
            double candidate_distance = euclidean_distance_between(collected_points[first_index], collected_points[second_index]);
            if (candidate_distance > longest_observed_distance) longest_observed_distance = candidate_distance;
        }
    }
    printf("%.6f\n", longest_observed_distance);
    return 0;
}
