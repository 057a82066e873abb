#include <cstdio>

int main() {
    std::puts("flipwidth cli placeholder");
    return 0;
}
