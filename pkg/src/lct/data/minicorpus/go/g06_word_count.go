package main

import (
	"bufio"
	"fmt"
	"os"
	"sort"
	"strings"
)

func countWordFrequencies(textLineScanner *bufio.Scanner) map[string]int {
	var wordFrequencyTable = make(map[string]int)
	for textLineScanner.Scan() {
		for _, extractedWord := range strings.Fields(strings.ToLower(textLineScanner.Text())) {
			wordFrequencyTable[extractedWord]++
		}
	}
	return wordFrequencyTable
}

func topFrequentWords(wordFrequencyTable map[string]int, requestedWordLimit int) []string {
	var distinctWordList []string
	for uniqueWordKey := range wordFrequencyTable {
		distinctWordList = append(distinctWordList, uniqueWordKey)
	}
	sort.Slice(distinctWordList, func(leftPosition, rightPosition int) bool {
		if wordFrequencyTable[distinctWordList[leftPosition]] != wordFrequencyTable[distinctWordList[rightPosition]] {
			return wordFrequencyTable[distinctWordList[leftPosition]] > wordFrequencyTable[distinctWordList[rightPosition]]
		}
		return distinctWordList[leftPosition] < distinctWordList[rightPosition]
	})
	if len(distinctWordList) > requestedWordLimit {
		distinctWordList = distinctWordList[:requestedWordLimit]
	}
	return distinctWordList
}

func main() {
	var standardInputScanner = bufio.NewScanner(os.Stdin)
	var wordFrequencyTable = countWordFrequencies(standardInputScanner)
	for _, frequentWordValue := range topFrequentWords(wordFrequencyTable, 10) {
		fmt.Println(frequentWordValue, wordFrequencyTable[frequentWordValue])
	}
}
