#include <cstdio>
int main() { std::puts("goldbach-kit: subcommands arrive with the full build"); }
