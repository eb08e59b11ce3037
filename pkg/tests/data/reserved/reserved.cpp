#include <iostream>
#include <string>
#include <vector>

class Base {
public:
    virtual ~Base() = default;
    virtual int value() const { return 0; }
};

class Derived : public Base {
public:
    explicit Derived(int initial_value) : stored_value(initial_value) {}
    int value() const override { return this->stored_value; }
    static Derived make(int seed_value) { return Derived(seed_value); }

private:
    int stored_value;
};

int print(const std::string &message_text) {
    std::cout << message_text << std::endl;
    return 0;
}

int main() {
    bool self = true;
    bool super = false;
    int *null = nullptr;
    std::vector<int> collected_values;
    Derived derived_instance = Derived::make(7);
    collected_values.push_back(derived_instance.value());
    print("size");
    std::cout << collected_values.size() << self << super << (null == nullptr) << std::endl;
    return 0;
}
