public class J09ArrayInitializer {
    static final int[] coinDenominationValues = {1, 5, 10, 25, 50};

    static int minimumCoinsForAmount(int requestedChangeAmount) {
        int[] minimumCoinTable = new int[requestedChangeAmount + 1];
        java.util.Arrays.fill(minimumCoinTable, Integer.MAX_VALUE);
        minimumCoinTable[0] = 0;
        for (int partialAmountValue = 1; partialAmountValue <= requestedChangeAmount; partialAmountValue++) {
            for (int denominationValue : coinDenominationValues) {
                if (denominationValue <= partialAmountValue && minimumCoinTable[partialAmountValue - denominationValue] != Integer.MAX_VALUE) {
                    minimumCoinTable[partialAmountValue] = Math.min(minimumCoinTable[partialAmountValue],
                            (minimumCoinTable[partialAmountValue - denominationValue]) + 1);
                }
            }
        }
        return minimumCoinTable[requestedChangeAmount];
    }

    public static void main(String[] args) {
        java.util.Scanner changeInputScanner = new java.util.Scanner(System.in);
        int requestedChangeAmount = changeInputScanner.nextInt();
        System.out.println(minimumCoinsForAmount(requestedChangeAmount));
    }
}
