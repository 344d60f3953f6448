#include <cstdio>

int main() {
  std::puts("ccr: placeholder");
  return 0;
}
