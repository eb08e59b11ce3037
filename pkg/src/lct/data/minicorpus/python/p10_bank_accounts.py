class CustomerBankAccount:
    """Ledger for one customer."""

    def __init__(self, account_holder_name, opening_balance_amount=0):
        self.account_holder_name = account_holder_name
        self.current_balance_amount = opening_balance_amount
        self.transaction_history_records = []

    def deposit_funds(self, deposit_amount_value):
        self.current_balance_amount += deposit_amount_value
        self.transaction_history_records.append(("deposit", deposit_amount_value))

    def withdraw_funds(self, withdrawal_amount_value):
        if withdrawal_amount_value > self.current_balance_amount:
            return False
        self.current_balance_amount -= withdrawal_amount_value
        self.transaction_history_records.append(("withdraw", withdrawal_amount_value))
        return True


def simulate_transaction_stream(transaction_commands):
    registered_accounts = {}
    rejected_transaction_total = 0
    for command_name, holder_name, amount_text in transaction_commands:
        target_account = registered_accounts.setdefault(holder_name, CustomerBankAccount(holder_name))
        if command_name == "deposit":
            target_account.deposit_funds(int(amount_text))
        elif not target_account.withdraw_funds(int(amount_text)):
            rejected_transaction_total += 1
    return registered_accounts, rejected_transaction_total


command_count = int(input())
transaction_commands = [tuple(input().split()) for _ in range(command_count)]
registered_accounts, rejected_transaction_total = simulate_transaction_stream(transaction_commands)
for holder_name in sorted(registered_accounts):
    print(holder_name, registered_accounts[holder_name].current_balance_amount)
print(rejected_transaction_total)
