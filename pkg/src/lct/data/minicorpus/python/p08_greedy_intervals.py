def maximum_non_overlapping_meetings(meeting_intervals):
    sorted_by_finish_time = sorted(meeting_intervals, key=lambda interval_pair: interval_pair[1])
    selected_meeting_count = 0
    latest_finish_time = float("-inf")
    for meeting_start_time, meeting_finish_time in sorted_by_finish_time:
        if meeting_start_time >= latest_finish_time:
            selected_meeting_count += 1
            latest_finish_time = meeting_finish_time
    return selected_meeting_count


def parse_meeting_intervals(raw_input_lines):
    parsed_intervals = []
    for single_input_line in raw_input_lines:
        start_token, finish_token = single_input_line.split()
        parsed_intervals.append((int(start_token), int(finish_token)))
    return parsed_intervals


number_of_meetings = int(input())
raw_input_lines = [input() for _ in range(number_of_meetings)]
print(maximum_non_overlapping_meetings(parse_meeting_intervals(raw_input_lines)))
