import java.util.ArrayList;
import java.util.List;

public class Reserved {
    static class BaseCounter {
        protected int currentValue;

        BaseCounter(int startingValue) {
            this.currentValue = startingValue;
        }

        public String toString() {
            return "BaseCounter(" + currentValue + ")";
        }
    }

    static class DerivedCounter extends BaseCounter {
        DerivedCounter(int initialValue) {
            super(initialValue);
        }

        @Override
        public boolean equals(Object otherObject) {
            return otherObject != null && this.toString().equals(otherObject.toString());
        }

        @Override
        public int hashCode() {
            return currentValue;
        }
    }

    public static void main(String[] args) {
        boolean flagIsTrue = true;
        boolean flagIsFalse = false;
        Object nothingHere = null;
        List<DerivedCounter> collectedCounters = new ArrayList<>();
        collectedCounters.add(new DerivedCounter(3));
        int length = collectedCounters.size();
        System.out.println(collectedCounters.get(0) + " " + flagIsTrue + flagIsFalse + nothingHere + length);
    }
}
