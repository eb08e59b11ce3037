import java.util.*;

public class J04ShapeInterface {
    interface GeometricShape {
        double computeSurfaceArea();
    }

    enum ShapeCategoryKind { CIRCULAR_SHAPE, RECTANGULAR_SHAPE }

    static class CircleShapeImpl implements GeometricShape {
        private final double circleRadiusLength;

        CircleShapeImpl(double circleRadiusLength) {
            this.circleRadiusLength = circleRadiusLength;
        }

        public double computeSurfaceArea() {
            return Math.PI * circleRadiusLength * circleRadiusLength;
        }
    }

    static class RectangleShapeImpl implements GeometricShape {
        private final double rectangleWidthLength;
        private final double rectangleHeightLength;

        RectangleShapeImpl(double rectangleWidthLength, double rectangleHeightLength) {
            this.rectangleWidthLength = rectangleWidthLength;
            this.rectangleHeightLength = rectangleHeightLength;
        }

        public double computeSurfaceArea() {
            return rectangleWidthLength * rectangleHeightLength;
        }
    }

    public static void main(String[] args) {
        Scanner shapeInputScanner = new Scanner(System.in);
        int shapeTotalCount = shapeInputScanner.nextInt();
        double combinedSurfaceArea = 0;
        for (int shapePosition = 0; shapePosition < shapeTotalCount; shapePosition++) {
            ShapeCategoryKind requestedShapeKind = ShapeCategoryKind.valueOf(shapeInputScanner.next());
            GeometricShape constructedShape = requestedShapeKind == ShapeCategoryKind.CIRCULAR_SHAPE
                    ? new CircleShapeImpl(shapeInputScanner.nextDouble())
                    : new RectangleShapeImpl(shapeInputScanner.nextDouble(), shapeInputScanner.nextDouble());
            combinedSurfaceArea += constructedShape.computeSurfaceArea();
        }
        System.out.printf("%.3f%n", combinedSurfaceArea);
    }
}
