#include <cstdio>
int main() { std::puts("horotomo (wiring pending)"); return 0; }
