package main

import "fmt"

type integerStackContainer struct {
	storedStackElements []int
}

func (stackContainerReceiver *integerStackContainer) pushStackElement(pushedElementValue int) {
	stackContainerReceiver.storedStackElements = append(stackContainerReceiver.storedStackElements, pushedElementValue)
}

func (stackContainerReceiver *integerStackContainer) popStackElement() (int, bool) {
	var currentStackSize = len(stackContainerReceiver.storedStackElements)
	if currentStackSize == 0 {
		return 0, false
	}
	var poppedElementValue = stackContainerReceiver.storedStackElements[currentStackSize-1]
	stackContainerReceiver.storedStackElements = stackContainerReceiver.storedStackElements[:currentStackSize-1]
	return poppedElementValue, true
}

func evaluatePostfixExpression(postfixTokenSequence []string) int {
	var operandStackInstance integerStackContainer
	for _, postfixTokenValue := range postfixTokenSequence {
		switch postfixTokenValue {
		case "+", "-", "*":
			var rightOperandValue, _ = operandStackInstance.popStackElement()
			var leftOperandValue, _ = operandStackInstance.popStackElement()
			var combinedOperandResult int
			switch postfixTokenValue {
			case "+":
				combinedOperandResult = leftOperandValue + rightOperandValue
			case "-":
				combinedOperandResult = leftOperandValue - rightOperandValue
			default:
				combinedOperandResult = leftOperandValue * rightOperandValue
			}
			operandStackInstance.pushStackElement(combinedOperandResult)
		default:
			var parsedOperandValue int
			fmt.Sscan(postfixTokenValue, &parsedOperandValue)
			operandStackInstance.pushStackElement(parsedOperandValue)
		}
	}
	var finalExpressionValue, _ = operandStackInstance.popStackElement()
	return finalExpressionValue
}

func main() {
	fmt.Println(evaluatePostfixExpression([]string{"3", "4", "+", "2", "*"}))
}
