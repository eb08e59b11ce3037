import java.util.*;

public class J03GraphTraversal {
    private final List<List<Integer>> adjacencyListsByVertex = new ArrayList<>();

    J03GraphTraversal(int totalVertexCount) {
        for (int vertexPosition = 0; vertexPosition < totalVertexCount; vertexPosition++) {
            adjacencyListsByVertex.add(new ArrayList<>());
        }
    }

    void connectVertexPair(int firstEndpoint, int secondEndpoint) {
        adjacencyListsByVertex.get(firstEndpoint).add(secondEndpoint);
        adjacencyListsByVertex.get(secondEndpoint).add(firstEndpoint);
    }

    int countConnectedComponents() {
        boolean[] visitedVertexFlags = new boolean[adjacencyListsByVertex.size()];
        int discoveredComponentCount = 0;
        Deque<Integer> explorationStack = new ArrayDeque<>();
        for (int startingVertex = 0; startingVertex < visitedVertexFlags.length; startingVertex++) {
            if (visitedVertexFlags[startingVertex]) continue;
            discoveredComponentCount++;
            explorationStack.push(startingVertex);
            visitedVertexFlags[startingVertex] = true;
            while (!explorationStack.isEmpty()) {
                int exploredVertex = explorationStack.pop();
                for (int adjacentVertex : adjacencyListsByVertex.get(exploredVertex)) {
                    if (!visitedVertexFlags[adjacentVertex]) {
                        visitedVertexFlags[adjacentVertex] = true;
                        explorationStack.push(adjacentVertex);
                    }
                }
            }
        }
        return discoveredComponentCount;
    }

    public static void main(String[] args) {
        Scanner inputScanner = new Scanner(System.in);
        int vertexTotal = inputScanner.nextInt();
        int edgeTotal = inputScanner.nextInt();
        J03GraphTraversal networkGraph = new J03GraphTraversal(vertexTotal);
        for (int edgeIndex = 0; edgeIndex < edgeTotal; edgeIndex++) {
            networkGraph.connectVertexPair(inputScanner.nextInt() - 1, inputScanner.nextInt() - 1);
        }
        System.out.println(networkGraph.countConnectedComponents());
    }
}
