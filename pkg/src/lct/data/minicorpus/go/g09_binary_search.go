package main

import (
	"fmt"
	"sort"
)

func firstPositionNotLess(sortedNumberSequence []int, searchedTargetValue int) int {
	var lowBoundaryIndex, highBoundaryIndex = 0, len(sortedNumberSequence)
	for lowBoundaryIndex < highBoundaryIndex {
		var middleProbeIndex = (lowBoundaryIndex + highBoundaryIndex) / 2
		if sortedNumberSequence[middleProbeIndex] < searchedTargetValue {
			lowBoundaryIndex = middleProbeIndex + 1
		} else {
			highBoundaryIndex = middleProbeIndex
		}
	}
	return lowBoundaryIndex
}

func main() {
	var sequenceLengthValue, queryTotalCount int
	fmt.Scan(&sequenceLengthValue, &queryTotalCount)
	var sortedNumberSequence = make([]int, sequenceLengthValue)
	for fillPosition := range sortedNumberSequence {
		fmt.Scan(&sortedNumberSequence[fillPosition])
	}
	sort.Ints(sortedNumberSequence)
	for queryPosition := 0; queryPosition < queryTotalCount; queryPosition++ {
		var searchedTargetValue int
		fmt.Scan(&searchedTargetValue)
		fmt.Println(firstPositionNotLess(sortedNumberSequence, searchedTargetValue))
	}
}
