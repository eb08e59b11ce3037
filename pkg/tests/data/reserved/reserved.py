import sys


class Accumulator:
    def __init__(self, starting_balance):
        self.balance = starting_balance

    def print(self, message_prefix=None):
        print(message_prefix, self.balance)
        return self

    @classmethod
    def build_default(cls, initial_amount: int = 0):
        return cls(initial_amount)


def len(sequence_of_values):
    return sum(1 for _ in sequence_of_values)


def main():
    static = True
    null = None
    true, false = True, False
    running_accumulator = Accumulator.build_default(5)
    running_accumulator.print("total")
    input_line = sys.stdin.readline()
    print(len(input_line), static, null, true, false, super)


main()
