package main

import (
	"bufio"
	"fmt"
	"os"
)

func buildPrefixSumTable(inputValues []int64) []int64 {
	prefixSumTable := make([]int64, len(inputValues)+1)
	for currentIndex, currentValue := range inputValues {
		prefixSumTable[currentIndex+1] = prefixSumTable[currentIndex] + currentValue
	}
	return prefixSumTable
}

func main() {
	var bufferedInputReader = bufio.NewReader(os.Stdin)
	var bufferedOutputWriter = bufio.NewWriter(os.Stdout)
	defer bufferedOutputWriter.Flush()
	var numberOfElements, numberOfQueries int
	fmt.Fscan(bufferedInputReader, &numberOfElements, &numberOfQueries)
	var inputValues = make([]int64, numberOfElements)
	for readIndex := range inputValues {
		fmt.Fscan(bufferedInputReader, &inputValues[readIndex])
	}
	var prefixSumTable = buildPrefixSumTable(inputValues)
	for queryNumber := 0; queryNumber < numberOfQueries; queryNumber++ {
		var leftBoundary, rightBoundary int
		fmt.Fscan(bufferedInputReader, &leftBoundary, &rightBoundary)
		fmt.Fprintln(bufferedOutputWriter, prefixSumTable[rightBoundary]-prefixSumTable[leftBoundary-1])
	}
}
