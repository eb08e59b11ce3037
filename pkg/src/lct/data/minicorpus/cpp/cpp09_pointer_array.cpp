#include <cstdio>
#include <cstring>

int occurrence_counters[26];

void tally_lowercase_letters(const char *input_buffer_pointer, int *letter_counter_array) {
    for (const char *scan_pointer = input_buffer_pointer; *scan_pointer; ++scan_pointer) {
        if (*scan_pointer >= 'a' && *scan_pointer <= 'z') letter_counter_array[*scan_pointer - 'a']++;
    }
}

int most_common_letter_index(const int *letter_counter_array, int alphabet_size = 26) {
    int winning_letter_index = 0;
    for (int letter_position = 1; letter_position < alphabet_size; letter_position++)
        if (letter_counter_array[letter_position] > letter_counter_array[winning_letter_index]) winning_letter_index = letter_position;
    return winning_letter_index;
}

int main() {
    char line_input_buffer[100005];
    while (scanf("%100000s", line_input_buffer) == 1) tally_lowercase_letters(line_input_buffer, occurrence_counters);
    int winning_letter_index = most_common_letter_index(occurrence_counters);
    printf("%c %d\n", 'a' + winning_letter_index, occurrence_counters[winning_letter_index]);
    return 0;
}
