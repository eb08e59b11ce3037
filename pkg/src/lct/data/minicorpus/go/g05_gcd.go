package main

import "fmt"

func greatestCommonDivisor(firstOperandValue, secondOperandValue int64) int64 {
	for secondOperandValue != 0 {
		firstOperandValue, secondOperandValue = secondOperandValue, firstOperandValue%secondOperandValue
	}
	return firstOperandValue
}

func reduceFractionToLowestTerms(fractionNumerator, fractionDenominator int64) (int64, int64) {
	var commonDivisorValue = greatestCommonDivisor(fractionNumerator, fractionDenominator)
	return fractionNumerator / commonDivisorValue, fractionDenominator / commonDivisorValue
}

func main() {
	var testCaseCount int
	fmt.Scan(&testCaseCount)
	for testCaseNumber := 0; testCaseNumber < testCaseCount; testCaseNumber++ {
		var inputNumerator, inputDenominator int64
		fmt.Scan(&inputNumerator, &inputDenominator)
		var reducedNumerator, reducedDenominator = reduceFractionToLowestTerms(inputNumerator, inputDenominator)
		fmt.Printf("%d/%d\n", reducedNumerator, reducedDenominator)
	}
}
