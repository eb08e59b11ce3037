#include <stdio.h>

#define MAXIMUM_DIMENSION 64

void multiply_square_matrices(long long left_matrix[MAXIMUM_DIMENSION][MAXIMUM_DIMENSION],
                              long long right_matrix[MAXIMUM_DIMENSION][MAXIMUM_DIMENSION],
                              long long product_matrix[MAXIMUM_DIMENSION][MAXIMUM_DIMENSION],
                              int matrix_dimension) {
    for (int row_position = 0; row_position < matrix_dimension; row_position++)
        for (int column_position = 0; column_position < matrix_dimension; column_position++) {
            long long accumulated_product = 0;
            for (int shared_position = 0; shared_position < matrix_dimension; shared_position++)
                accumulated_product += left_matrix[row_position][shared_position] * right_matrix[shared_position][column_position];
            product_matrix[row_position][column_position] = accumulated_product;
        }
}

long long left_matrix_storage[MAXIMUM_DIMENSION][MAXIMUM_DIMENSION];
long long right_matrix_storage[MAXIMUM_DIMENSION][MAXIMUM_DIMENSION];
long long product_matrix_storage[MAXIMUM_DIMENSION][MAXIMUM_DIMENSION];

int main(void) {
    int matrix_dimension;
    scanf("%d", &matrix_dimension);
    for (int row_position = 0; row_position < matrix_dimension; row_position++)
        for (int column_position = 0; column_position < matrix_dimension; column_position++)
            scanf("%lld", &left_matrix_storage[row_position][column_position]);
    for (int row_position = 0; row_position < matrix_dimension; row_position++)
        for (int column_position = 0; column_position < matrix_dimension; column_position++)
            scanf("%lld", &right_matrix_storage[row_position][column_position]);
    multiply_square_matrices(left_matrix_storage, right_matrix_storage, product_matrix_storage, matrix_dimension);
    for (int row_position = 0; row_position < matrix_dimension; row_position++) {
        for (int column_position = 0; column_position < matrix_dimension; column_position++)
            printf("%lld ", product_matrix_storage[row_position][column_position]);
        printf("\n");
    }
    return 0;
}
