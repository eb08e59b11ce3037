def rotate_square_matrix_clockwise(square_matrix_rows):
    matrix_dimension = len(square_matrix_rows)
    rotated_matrix_rows = [[0] * matrix_dimension for _ in range(matrix_dimension)]
    for row_position in range(matrix_dimension):
        for column_position in range(matrix_dimension):
            rotated_matrix_rows[column_position][matrix_dimension - 1 - row_position] = square_matrix_rows[row_position][column_position]
    return rotated_matrix_rows


def matrices_are_identical(first_matrix_rows, second_matrix_rows):
    return all(first_row == second_row for first_row, second_row in zip(first_matrix_rows, second_matrix_rows))


def minimum_rotations_needed(initial_matrix_rows, target_matrix_rows):
    working_matrix_rows = initial_matrix_rows
    for rotation_counter in range(4):
        if matrices_are_identical(working_matrix_rows, target_matrix_rows):
            return rotation_counter
        working_matrix_rows = rotate_square_matrix_clockwise(working_matrix_rows)
    return -1


matrix_dimension = int(input())
initial_matrix_rows = [list(map(int, input().split())) for _ in range(matrix_dimension)]
target_matrix_rows = [list(map(int, input().split())) for _ in range(matrix_dimension)]
print(minimum_rotations_needed(initial_matrix_rows, target_matrix_rows))
