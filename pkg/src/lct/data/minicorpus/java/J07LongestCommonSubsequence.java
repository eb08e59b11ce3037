import java.util.Scanner;

public class J07LongestCommonSubsequence {
    static int longestCommonSubsequenceLength(String firstSequenceText, String secondSequenceText) {
        int firstSequenceLength = firstSequenceText.length();
        int secondSequenceLength = secondSequenceText.length();
        int[][] subproblemResultTable = new int[firstSequenceLength + 1][secondSequenceLength + 1];
        for (int firstCursor = 1; firstCursor <= firstSequenceLength; firstCursor++) {
            for (int secondCursor = 1; secondCursor <= secondSequenceLength; secondCursor++) {
                if (firstSequenceText.charAt(firstCursor - 1) == secondSequenceText.charAt(secondCursor - 1)) {
                    subproblemResultTable[firstCursor][secondCursor] = subproblemResultTable[firstCursor - 1][secondCursor - 1] + 1;
                } else {
                    subproblemResultTable[firstCursor][secondCursor] = Math.max(subproblemResultTable[firstCursor - 1][secondCursor],
                            subproblemResultTable[firstCursor][secondCursor - 1]);
                }
            }
        }
        return subproblemResultTable[firstSequenceLength][secondSequenceLength];
    }

    public static void main(String[] args) {
        Scanner sequenceInputScanner = new Scanner(System.in);
        String firstSequenceText = sequenceInputScanner.next();
        String secondSequenceText = sequenceInputScanner.next();
        System.out.println(longestCommonSubsequenceLength(firstSequenceText, secondSequenceText));
    }
}
