from collections import Counter


def most_frequent_character_report(input_sentence, minimum_required_count=2):
    character_frequencies = Counter(ch for ch in input_sentence if ch.isalpha())
    qualifying_characters = sorted(
        (frequency_value, letter_value)
        for letter_value, frequency_value in character_frequencies.items()
        if frequency_value >= minimum_required_count
    )
    return [letter_value for _, letter_value in reversed(qualifying_characters)]


def format_report_line(ranked_letters, separator_string=", "):
    if not ranked_letters:
        return "NONE"
    return separator_string.join(ranked_letters)


number_of_sentences = int(input())
for sentence_number in range(number_of_sentences):
    raw_sentence_text = input().strip().lower()
    ranked_letters = most_frequent_character_report(raw_sentence_text)
    print("Case #{}: {}".format(sentence_number + 1, format_report_line(ranked_letters)))
