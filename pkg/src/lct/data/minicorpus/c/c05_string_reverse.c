#include <stdio.h>
#include <string.h>

void reverse_character_buffer(char *character_buffer, int buffer_length) {
    int left_cursor = 0, right_cursor = buffer_length - 1;
    while (left_cursor < right_cursor) {
        char swapped_character = character_buffer[left_cursor];
        character_buffer[left_cursor] = character_buffer[right_cursor];
        character_buffer[right_cursor] = swapped_character;
        left_cursor++;
        right_cursor--;
    }
}

int is_palindrome_string(const char *candidate_string) {
    int candidate_length = strlen(candidate_string);
    for (int mirror_offset = 0; mirror_offset < candidate_length / 2; mirror_offset++) {
        if (candidate_string[mirror_offset] != candidate_string[candidate_length - 1 - mirror_offset]) return 0;
    }
    return 1;
}

int main(void) {
    char input_word_buffer[512];
    while (scanf("%511s", input_word_buffer) == 1) {
        int stored_word_length = strlen(input_word_buffer);
        int palindrome_flag = is_palindrome_string(input_word_buffer);
        reverse_character_buffer(input_word_buffer, stored_word_length);
        printf("%s %s\n", input_word_buffer, palindrome_flag ? "YES" : "NO");
    }
    return 0;
}
