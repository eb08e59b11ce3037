#include <bits/stdc++.h>
using namespace std;

struct ContestParticipant {
    string participant_handle;
    int solved_problem_count;
    int accumulated_penalty_time;
};

bool ranks_before_other(const ContestParticipant &first_participant, const ContestParticipant &second_participant) {
    if (first_participant.solved_problem_count != second_participant.solved_problem_count)
        return first_participant.solved_problem_count > second_participant.solved_problem_count;
    if (first_participant.accumulated_penalty_time != second_participant.accumulated_penalty_time)
        return first_participant.accumulated_penalty_time < second_participant.accumulated_penalty_time;
    return first_participant.participant_handle < second_participant.participant_handle;
}

int main() {
    int participant_total;
    cin >> participant_total;
    vector<ContestParticipant> scoreboard_entries(participant_total);
    for (auto &scoreboard_entry : scoreboard_entries)
        cin >> scoreboard_entry.participant_handle >> scoreboard_entry.solved_problem_count >> scoreboard_entry.accumulated_penalty_time;
    sort(scoreboard_entries.begin(), scoreboard_entries.end(), ranks_before_other);
    int displayed_rank_number = 1;
    for (const auto &scoreboard_entry : scoreboard_entries)
        cout << displayed_rank_number++ << ". " << scoreboard_entry.participant_handle << "\n";
}
