import java.util.*;

public class J06MatrixSpiral {
    static List<Integer> traverseMatrixInSpiralOrder(int[][] numericMatrixCells) {
        List<Integer> spiralOrderValues = new ArrayList<>();
        int topRowBoundary = 0, bottomRowBoundary = numericMatrixCells.length - 1;
        int leftColumnBoundary = 0, rightColumnBoundary = numericMatrixCells[0].length - 1;
        while (topRowBoundary <= bottomRowBoundary && leftColumnBoundary <= rightColumnBoundary) {
            for (int columnCursor = leftColumnBoundary; columnCursor <= rightColumnBoundary; columnCursor++)
                spiralOrderValues.add(numericMatrixCells[topRowBoundary][columnCursor]);
            topRowBoundary++;
            for (int rowCursor = topRowBoundary; rowCursor <= bottomRowBoundary; rowCursor++)
                spiralOrderValues.add(numericMatrixCells[rowCursor][rightColumnBoundary]);
            rightColumnBoundary--;
            if (topRowBoundary <= bottomRowBoundary) {
                for (int columnCursor = rightColumnBoundary; columnCursor >= leftColumnBoundary; columnCursor--)
                    spiralOrderValues.add(numericMatrixCells[bottomRowBoundary][columnCursor]);
                bottomRowBoundary--;
            }
            if (leftColumnBoundary <= rightColumnBoundary) {
                for (int rowCursor = bottomRowBoundary; rowCursor >= topRowBoundary; rowCursor--)
                    spiralOrderValues.add(numericMatrixCells[rowCursor][leftColumnBoundary]);
                leftColumnBoundary++;
            }
        }
        return spiralOrderValues;
    }

    public static void main(String[] args) {
        int[][] demonstrationMatrix = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
        System.out.println(traverseMatrixInSpiralOrder(demonstrationMatrix));
    }
}
