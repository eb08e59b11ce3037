#include <iostream>
#include <map>
#include <string>

class WarehouseInventory {
public:
    void register_incoming_shipment(const std::string &product_identifier, int shipment_quantity) {
        stock_levels_by_product[product_identifier] += shipment_quantity;
    }

    bool fulfil_customer_order(const std::string &product_identifier, int requested_quantity) {
        int available_quantity = stock_levels_by_product[product_identifier];
        if (available_quantity < requested_quantity) return false;
        stock_levels_by_product[product_identifier] = available_quantity - requested_quantity;
        return true;
    }

    int total_units_in_stock() const {
        int running_unit_total = 0;
        for (const auto &inventory_entry : stock_levels_by_product) running_unit_total += inventory_entry.second;
        return running_unit_total;
    }

private:
    std::map<std::string, int> stock_levels_by_product;
};

int main() {
    WarehouseInventory regional_warehouse;
    int command_total;
    std::cin >> command_total;
    int rejected_order_count = 0;
    for (int command_position = 0; command_position < command_total; command_position++) {
        std::string command_keyword, product_identifier;
        int quantity_argument;
        std::cin >> command_keyword >> product_identifier >> quantity_argument;
        if (command_keyword == "in") regional_warehouse.register_incoming_shipment(product_identifier, quantity_argument);
        else if (!regional_warehouse.fulfil_customer_order(product_identifier, quantity_argument)) rejected_order_count++;
    }
    std::cout << regional_warehouse.total_units_in_stock() << " " << rejected_order_count << std::endl;
    return 0;
}
