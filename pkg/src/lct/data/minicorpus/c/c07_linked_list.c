#include <stdio.h>
#include <stdlib.h>

struct singly_linked_node {
    int stored_value;
    struct singly_linked_node *next_node_pointer;
};

struct singly_linked_node *prepend_list_node(struct singly_linked_node *current_head_node, int inserted_value) {
    struct singly_linked_node *freshly_allocated_node = malloc(sizeof(struct singly_linked_node));
    freshly_allocated_node->stored_value = inserted_value;
    freshly_allocated_node->next_node_pointer = current_head_node;
    return freshly_allocated_node;
}

struct singly_linked_node *reverse_linked_list(struct singly_linked_node *current_head_node) {
    struct singly_linked_node *previous_list_node = NULL;
    while (current_head_node != NULL) {
        struct singly_linked_node *following_list_node = current_head_node->next_node_pointer;
        current_head_node->next_node_pointer = previous_list_node;
        previous_list_node = current_head_node;
        current_head_node = following_list_node;
    }
    return previous_list_node;
}

int main(void) {
    int element_total, scanned_value;
    struct singly_linked_node *list_head_pointer = NULL;
    scanf("%d", &element_total);
    for (int loop_counter = 0; loop_counter < element_total; loop_counter++) {
        scanf("%d", &scanned_value);
        list_head_pointer = prepend_list_node(list_head_pointer, scanned_value);
    }
    list_head_pointer = reverse_linked_list(list_head_pointer);
    for (struct singly_linked_node *walking_pointer = list_head_pointer; walking_pointer; walking_pointer = walking_pointer->next_node_pointer)
        printf("%d ", walking_pointer->stored_value);
    printf("\n");
    return 0;
}
