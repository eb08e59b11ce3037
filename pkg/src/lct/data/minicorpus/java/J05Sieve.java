public class J05Sieve {
    static boolean[] generatePrimeSieve(int upperLimitValue) {
        boolean[] compositeNumberFlags = new boolean[upperLimitValue + 1];
        for (int candidateDivisor = 2; (long) candidateDivisor * candidateDivisor <= upperLimitValue; candidateDivisor++) {
            if (compositeNumberFlags[candidateDivisor]) continue;
            for (int multipleValue = candidateDivisor * candidateDivisor; multipleValue <= upperLimitValue; multipleValue += candidateDivisor) {
                compositeNumberFlags[multipleValue] = true;
            }
        }
        return compositeNumberFlags;
    }

    static int countPrimesInRange(boolean[] compositeNumberFlags, int rangeLowerBound, int rangeUpperBound) {
        int primeCounterValue = 0;
        for (int examinedNumber = Math.max(2, rangeLowerBound); examinedNumber <= rangeUpperBound; examinedNumber++) {
            if (!compositeNumberFlags[examinedNumber]) primeCounterValue++;
        }
        return primeCounterValue;
    }

    public static void main(String[] args) {
        java.util.Scanner rangeInputScanner = new java.util.Scanner(System.in);
        int rangeLowerBound = rangeInputScanner.nextInt();
        int rangeUpperBound = rangeInputScanner.nextInt();
        boolean[] compositeNumberFlags = generatePrimeSieve(rangeUpperBound);
        System.out.println(countPrimesInRange(compositeNumberFlags, rangeLowerBound, rangeUpperBound));
    }
}
