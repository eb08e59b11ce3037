import java.util.*;

public class J02BankAccount {
    static class CustomerAccountRecord {
        private final String accountHolderName;
        private long currentBalanceAmount;

        CustomerAccountRecord(String accountHolderName, long openingBalanceAmount) {
            this.accountHolderName = accountHolderName;
            this.currentBalanceAmount = openingBalanceAmount;
        }

        boolean withdrawRequestedAmount(long withdrawalAmount) {
            if (withdrawalAmount > currentBalanceAmount) {
                return false;
            }
            currentBalanceAmount -= withdrawalAmount;
            return true;
        }

        void depositRequestedAmount(long depositAmount) {
            currentBalanceAmount += depositAmount;
        }

        @Override
        public String toString() {
            return accountHolderName + " " + currentBalanceAmount;
        }
    }

    public static void main(String[] args) {
        Scanner consoleScanner = new Scanner(System.in);
        int operationTotal = consoleScanner.nextInt();
        Map<String, CustomerAccountRecord> accountsByHolder = new TreeMap<>();
        int rejectedOperationCount = 0;
        for (int operationIndex = 0; operationIndex < operationTotal; operationIndex++) {
            String operationKeyword = consoleScanner.next();
            String holderNameArgument = consoleScanner.next();
            long amountArgument = consoleScanner.nextLong();
            CustomerAccountRecord targetAccount = accountsByHolder.computeIfAbsent(holderNameArgument, missingHolderName -> new CustomerAccountRecord(missingHolderName, 0));
            if (operationKeyword.equals("deposit")) {
                targetAccount.depositRequestedAmount(amountArgument);
            } else if (!targetAccount.withdrawRequestedAmount(amountArgument)) {
                rejectedOperationCount++;
            }
        }
        for (CustomerAccountRecord accountSnapshot : accountsByHolder.values()) {
            System.out.println(accountSnapshot);
        }
        System.out.println(rejectedOperationCount);
    }
}
