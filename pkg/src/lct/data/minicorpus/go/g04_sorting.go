package main

import (
	"fmt"
	"sort"
)

type marathonRunnerResult struct {
	runnerDisplayName string
	finishTimeSeconds int
}

func rankRunnersByFinishTime(collectedRunnerResults []marathonRunnerResult) []string {
	sort.Slice(collectedRunnerResults, func(firstPosition, secondPosition int) bool {
		if collectedRunnerResults[firstPosition].finishTimeSeconds != collectedRunnerResults[secondPosition].finishTimeSeconds {
			return collectedRunnerResults[firstPosition].finishTimeSeconds < collectedRunnerResults[secondPosition].finishTimeSeconds
		}
		return collectedRunnerResults[firstPosition].runnerDisplayName < collectedRunnerResults[secondPosition].runnerDisplayName
	})
	var orderedRunnerNames []string
	for _, rankedRunnerResult := range collectedRunnerResults {
		orderedRunnerNames = append(orderedRunnerNames, rankedRunnerResult.runnerDisplayName)
	}
	return orderedRunnerNames
}

func main() {
	var runnerTotalCount int
	fmt.Scan(&runnerTotalCount)
	var collectedRunnerResults = make([]marathonRunnerResult, runnerTotalCount)
	for runnerPosition := range collectedRunnerResults {
		fmt.Scan(&collectedRunnerResults[runnerPosition].runnerDisplayName, &collectedRunnerResults[runnerPosition].finishTimeSeconds)
	}
	for placementNumber, runnerName := range rankRunnersByFinishTime(collectedRunnerResults) {
		fmt.Println(placementNumber+1, runnerName)
	}
}
