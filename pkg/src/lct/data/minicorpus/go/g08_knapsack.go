package main

import "fmt"

func maximumIntegerValue(firstCandidateValue, secondCandidateValue int) int {
	if firstCandidateValue > secondCandidateValue {
		return firstCandidateValue
	}
	return secondCandidateValue
}

func solveZeroOneKnapsack(itemWeightValues, itemProfitValues []int, knapsackCapacityLimit int) int {
	var bestProfitForCapacity = make([]int, knapsackCapacityLimit+1)
	for itemPosition := range itemWeightValues {
		for remainingCapacity := knapsackCapacityLimit; remainingCapacity >= itemWeightValues[itemPosition]; remainingCapacity-- {
			bestProfitForCapacity[remainingCapacity] = maximumIntegerValue(bestProfitForCapacity[remainingCapacity],
				bestProfitForCapacity[remainingCapacity-itemWeightValues[itemPosition]]+itemProfitValues[itemPosition])
		}
	}
	return bestProfitForCapacity[knapsackCapacityLimit]
}

func main() {
	var itemTotalCount, knapsackCapacityLimit int
	fmt.Scan(&itemTotalCount, &knapsackCapacityLimit)
	var itemWeightValues = make([]int, itemTotalCount)
	var itemProfitValues = make([]int, itemTotalCount)
	for itemPosition := 0; itemPosition < itemTotalCount; itemPosition++ {
		fmt.Scan(&itemWeightValues[itemPosition], &itemProfitValues[itemPosition])
	}
	fmt.Println(solveZeroOneKnapsack(itemWeightValues, itemProfitValues, knapsackCapacityLimit))
}
