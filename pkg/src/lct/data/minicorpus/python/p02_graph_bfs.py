from collections import deque
import sys


class UndirectedGraphStructure:
    def __init__(self, number_of_vertices):
        self.number_of_vertices = number_of_vertices
        self.adjacency_lists = [[] for _ in range(number_of_vertices)]

    def add_undirected_edge(self, first_endpoint, second_endpoint):
        self.adjacency_lists[first_endpoint].append(second_endpoint)
        self.adjacency_lists[second_endpoint].append(first_endpoint)

    def shortest_distances_from(self, starting_vertex):
        distance_from_start = [-1] * self.number_of_vertices
        distance_from_start[starting_vertex] = 0
        pending_vertices = deque([starting_vertex])
        while pending_vertices:
            current_vertex = pending_vertices.popleft()
            for neighbouring_vertex in self.adjacency_lists[current_vertex]:
                if distance_from_start[neighbouring_vertex] == -1:
                    distance_from_start[neighbouring_vertex] = distance_from_start[current_vertex] + 1
                    pending_vertices.append(neighbouring_vertex)
        return distance_from_start


def solve_single_test_case(input_reader):
    vertex_count, edge_count = map(int, input_reader().split())
    graph_instance = UndirectedGraphStructure(vertex_count)
    for _ in range(edge_count):
        endpoint_a, endpoint_b = map(int, input_reader().split())
        graph_instance.add_undirected_edge(endpoint_a - 1, endpoint_b - 1)
    computed_distances = graph_instance.shortest_distances_from(0)
    print(" ".join(str(d) for d in computed_distances))


solve_single_test_case(sys.stdin.readline)
