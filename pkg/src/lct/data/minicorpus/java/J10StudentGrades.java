import java.util.*;

public class J10StudentGrades {
    static class StudentGradeRecord implements Comparable<StudentGradeRecord> {
        final String studentFullName;
        final int[] examinationScores;

        StudentGradeRecord(String studentFullName, int[] examinationScores) {
            this.studentFullName = studentFullName;
            this.examinationScores = examinationScores;
        }

        double averageExaminationScore() {
            int accumulatedScoreTotal = 0;
            for (int individualScore : examinationScores) accumulatedScoreTotal += individualScore;
            return examinationScores.length == 0 ? 0 : (double) accumulatedScoreTotal / examinationScores.length;
        }

        @Override
        public int compareTo(StudentGradeRecord otherStudentRecord) {
            return Double.compare(otherStudentRecord.averageExaminationScore(), averageExaminationScore());
        }
    }

    public static void main(String[] args) {
        Scanner gradeInputScanner = new Scanner(System.in);
        int studentTotalCount = gradeInputScanner.nextInt();
        int examinationsPerStudent = gradeInputScanner.nextInt();
        List<StudentGradeRecord> collectedStudentRecords = new ArrayList<>();
        for (int studentPosition = 0; studentPosition < studentTotalCount; studentPosition++) {
            String studentFullName = gradeInputScanner.next();
            int[] examinationScores = new int[examinationsPerStudent];
            for (int examPosition = 0; examPosition < examinationsPerStudent; examPosition++) examinationScores[examPosition] = gradeInputScanner.nextInt();
            collectedStudentRecords.add(new StudentGradeRecord(studentFullName, examinationScores));
        }
        Collections.sort(collectedStudentRecords);
        for (StudentGradeRecord rankedStudentRecord : collectedStudentRecords) {
            System.out.printf("%s %.2f%n", rankedStudentRecord.studentFullName, rankedStudentRecord.averageExaminationScore());
        }
    }
}
