#include <bits/stdc++.h>
using namespace std;

bool brackets_are_balanced(const string &bracket_sequence) {
    stack<char> pending_open_brackets;
    for (char current_symbol : bracket_sequence) {
        if (current_symbol == '(' || current_symbol == '[' || current_symbol == '{') {
            pending_open_brackets.push(current_symbol);
            continue;
        }
        if (pending_open_brackets.empty()) return false;
        char expected_opening_symbol = current_symbol == ')' ? '(' : current_symbol == ']' ? '[' : '{';
        if (pending_open_brackets.top() != expected_opening_symbol) return false;
        pending_open_brackets.pop();
    }
    return pending_open_brackets.empty();
}

int main() {
    int sequence_total;
    cin >> sequence_total;
    int balanced_sequence_count = 0;
    for (int sequence_position = 0; sequence_position < sequence_total; sequence_position++) {
        string bracket_sequence;
        cin >> bracket_sequence;
        if (brackets_are_balanced(bracket_sequence)) balanced_sequence_count++;
    }
    cout << balanced_sequence_count << endl;
}
