package main

import (
	"fmt"
	"math"
)

type measurableGeometricShape interface {
	computeEnclosedArea() float64
}

type circularShapeValue struct{ circleRadiusLength float64 }

type squareShapeValue struct{ squareSideLength float64 }

func (circleShapeReceiver circularShapeValue) computeEnclosedArea() float64 {
	return math.Pi * circleShapeReceiver.circleRadiusLength * circleShapeReceiver.circleRadiusLength
}

func (squareShapeReceiver squareShapeValue) computeEnclosedArea() float64 {
	return squareShapeReceiver.squareSideLength * squareShapeReceiver.squareSideLength
}

func accumulateTotalArea(collectedShapeValues []measurableGeometricShape) float64 {
	var runningAreaTotal float64
	for _, individualShapeValue := range collectedShapeValues {
		runningAreaTotal += individualShapeValue.computeEnclosedArea()
	}
	return runningAreaTotal
}

func main() {
	var shapeTotalCount int
	fmt.Scan(&shapeTotalCount)
	var collectedShapeValues []measurableGeometricShape
	for shapePosition := 0; shapePosition < shapeTotalCount; shapePosition++ {
		var shapeKindLabel string
		var shapeMeasurementValue float64
		fmt.Scan(&shapeKindLabel, &shapeMeasurementValue)
		if shapeKindLabel == "circle" {
			collectedShapeValues = append(collectedShapeValues, circularShapeValue{shapeMeasurementValue})
		} else {
			collectedShapeValues = append(collectedShapeValues, squareShapeValue{shapeMeasurementValue})
		}
	}
	fmt.Printf("%.3f\n", accumulateTotalArea(collectedShapeValues))
}
