#include <iostream>
int main() { std::cout << "quasiq placeholder\n"; return 0; }
