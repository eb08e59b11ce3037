package main

import "fmt"

type gridCellCoordinate struct{ rowIndex, columnIndex int }

func shortestPathThroughMaze(mazeLayoutRows []string, startingCell, destinationCell gridCellCoordinate) int {
	var mazeHeight = len(mazeLayoutRows)
	var mazeWidth = len(mazeLayoutRows[0])
	var stepsToReachCell = make([][]int, mazeHeight)
	for rowPosition := range stepsToReachCell {
		stepsToReachCell[rowPosition] = make([]int, mazeWidth)
		for columnPosition := range stepsToReachCell[rowPosition] {
			stepsToReachCell[rowPosition][columnPosition] = -1
		}
	}
	var movementDirections = [][2]int{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}
	var explorationQueue = []gridCellCoordinate{startingCell}
	stepsToReachCell[startingCell.rowIndex][startingCell.columnIndex] = 0
	for len(explorationQueue) > 0 {
		var currentCell = explorationQueue[0]
		explorationQueue = explorationQueue[1:]
		for _, directionOffset := range movementDirections {
			var nextRow, nextColumn = currentCell.rowIndex + directionOffset[0], currentCell.columnIndex + directionOffset[1]
			if nextRow < 0 || nextColumn < 0 || nextRow >= mazeHeight || nextColumn >= mazeWidth {
				continue
			}
			if mazeLayoutRows[nextRow][nextColumn] == '#' || stepsToReachCell[nextRow][nextColumn] != -1 {
				continue
			}
			stepsToReachCell[nextRow][nextColumn] = stepsToReachCell[currentCell.rowIndex][currentCell.columnIndex] + 1
			explorationQueue = append(explorationQueue, gridCellCoordinate{nextRow, nextColumn})
		}
	}
	return stepsToReachCell[destinationCell.rowIndex][destinationCell.columnIndex]
}

func main() {
	var mazeHeight, mazeWidth int
	fmt.Scan(&mazeHeight, &mazeWidth)
	var mazeLayoutRows = make([]string, mazeHeight)
	for rowPosition := range mazeLayoutRows {
		fmt.Scan(&mazeLayoutRows[rowPosition])
	}
	fmt.Println(shortestPathThroughMaze(mazeLayoutRows, gridCellCoordinate{0, 0}, gridCellCoordinate{mazeHeight - 1, mazeWidth - 1}))
}
