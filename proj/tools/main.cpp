#include "hyperlie/hyperlie.hpp"
int main() { return 0; }
