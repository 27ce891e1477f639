// Placeholder main; subcommands land once the engine headers exist.
#include <globalk/group.hpp>

#include <iostream>

int main() {
    std::cout << "globalk\n";
    return 0;
}
