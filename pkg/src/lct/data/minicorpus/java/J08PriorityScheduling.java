import java.util.*;

public class J08PriorityScheduling {
    record ScheduledTaskEntry(String taskDescriptionLabel, int taskPriorityLevel, int taskArrivalOrder) {
    }

    static List<String> executeTasksByPriority(List<ScheduledTaskEntry> incomingTaskEntries) {
        PriorityQueue<ScheduledTaskEntry> pendingTaskQueue = new PriorityQueue<>(
                Comparator.comparingInt((ScheduledTaskEntry queuedTaskEntry) -> -queuedTaskEntry.taskPriorityLevel())
                        .thenComparingInt(ScheduledTaskEntry::taskArrivalOrder));
        pendingTaskQueue.addAll(incomingTaskEntries);
        List<String> executionOrderLabels = new ArrayList<>();
        while (!pendingTaskQueue.isEmpty()) {
            executionOrderLabels.add(pendingTaskQueue.poll().taskDescriptionLabel());
        }
        return executionOrderLabels;
    }

    public static void main(String[] args) {
        Scanner taskInputScanner = new Scanner(System.in);
        int incomingTaskTotal = taskInputScanner.nextInt();
        List<ScheduledTaskEntry> incomingTaskEntries = new ArrayList<>();
        for (int arrivalCounter = 0; arrivalCounter < incomingTaskTotal; arrivalCounter++) {
            incomingTaskEntries.add(new ScheduledTaskEntry(taskInputScanner.next(), taskInputScanner.nextInt(), arrivalCounter));
        }
        System.out.println(String.join(" ", executeTasksByPriority(incomingTaskEntries)));
    }
}
