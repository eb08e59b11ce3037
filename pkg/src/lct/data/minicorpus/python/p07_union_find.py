import sys

input = sys.stdin.readline


class DisjointSetUnionForest:
    def __init__(self, element_count):
        self.parent_pointers = list(range(element_count))
        self.component_sizes = [1] * element_count

    def find_representative(self, element_index):
        while self.parent_pointers[element_index] != element_index:
            self.parent_pointers[element_index] = self.parent_pointers[self.parent_pointers[element_index]]
            element_index = self.parent_pointers[element_index]
        return element_index

    def merge_components(self, first_element, second_element):
        first_root = self.find_representative(first_element)
        second_root = self.find_representative(second_element)
        if first_root == second_root:
            return False
        if self.component_sizes[first_root] < self.component_sizes[second_root]:
            first_root, second_root = second_root, first_root
        self.parent_pointers[second_root] = first_root
        self.component_sizes[first_root] += self.component_sizes[second_root]
        return True


city_count, road_count = map(int, input().split())
road_network_forest = DisjointSetUnionForest(city_count)
redundant_road_total = 0
for _ in range(road_count):
    source_city, destination_city = map(int, input().split())
    if not road_network_forest.merge_components(source_city - 1, destination_city - 1):
        redundant_road_total += 1
print(redundant_road_total)
