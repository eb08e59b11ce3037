package main

import (
	"fmt"
	"strings"
)

type Accumulator struct {
	runningTotal int
}

func (self *Accumulator) String() string {
	return fmt.Sprintf("Accumulator(%d)", self.runningTotal)
}

func print(messageTextToShow string) {
	fmt.Println(messageTextToShow)
}

func main() {
	var static = true
	var null error = nil
	var super = false
	len := len("abc")
	var accumulatorInstance = &Accumulator{runningTotal: len}
	print(strings.ToUpper("done"))
	fmt.Println(accumulatorInstance.String(), static, null, super, true, false)
}
