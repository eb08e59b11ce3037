package main

import "fmt"

type rectangularGardenPlot struct {
	plotWidthMeters  float64
	plotLengthMeters float64
}

func (gardenPlotReceiver rectangularGardenPlot) computePlotArea() float64 {
	return gardenPlotReceiver.plotWidthMeters * gardenPlotReceiver.plotLengthMeters
}

func (gardenPlotReceiver *rectangularGardenPlot) scalePlotDimensions(scalingFactorValue float64) {
	gardenPlotReceiver.plotWidthMeters *= scalingFactorValue
	gardenPlotReceiver.plotLengthMeters *= scalingFactorValue
}

func main() {
	var numberOfGardenPlots int
	fmt.Scan(&numberOfGardenPlots)
	var combinedGardenArea float64
	for plotPosition := 0; plotPosition < numberOfGardenPlots; plotPosition++ {
		var measuredWidth, measuredLength, requestedScaling float64
		fmt.Scan(&measuredWidth, &measuredLength, &requestedScaling)
		var currentGardenPlot = rectangularGardenPlot{plotWidthMeters: measuredWidth, plotLengthMeters: measuredLength}
		currentGardenPlot.scalePlotDimensions(requestedScaling)
		combinedGardenArea += currentGardenPlot.computePlotArea()
	}
	fmt.Printf("%.2f\n", combinedGardenArea)
}
