import java.io.*;
import java.util.*;

public class J01PrefixSums {
    static long[] buildPrefixSumTable(int[] inputValues) {
        long[] prefixSumTable = new long[inputValues.length + 1];
        for (int currentIndex = 0; currentIndex < inputValues.length; currentIndex++) {
            prefixSumTable[currentIndex + 1] = prefixSumTable[currentIndex] + inputValues[currentIndex];
        }
        return prefixSumTable;
    }

    public static void main(String[] args) throws IOException {
        BufferedReader inputReader = new BufferedReader(new InputStreamReader(System.in));
        StringTokenizer headerTokenizer = new StringTokenizer(inputReader.readLine());
        int numberOfElements = Integer.parseInt(headerTokenizer.nextToken());
        int numberOfQueries = Integer.parseInt(headerTokenizer.nextToken());
        int[] inputValues = new int[numberOfElements];
        StringTokenizer valueTokenizer = new StringTokenizer(inputReader.readLine());
        for (int readIndex = 0; readIndex < numberOfElements; readIndex++) {
            inputValues[readIndex] = Integer.parseInt(valueTokenizer.nextToken());
        }
        long[] prefixSumTable = buildPrefixSumTable(inputValues);
        StringBuilder outputAccumulator = new StringBuilder();
        for (int queryNumber = 0; queryNumber < numberOfQueries; queryNumber++) {
            StringTokenizer queryTokenizer = new StringTokenizer(inputReader.readLine());
            int leftBoundary = Integer.parseInt(queryTokenizer.nextToken());
            int rightBoundary = Integer.parseInt(queryTokenizer.nextToken());
            outputAccumulator.append(prefixSumTable[rightBoundary] - prefixSumTable[leftBoundary - 1]).append('\n');
        }
        System.out.print(outputAccumulator);
    }
}
