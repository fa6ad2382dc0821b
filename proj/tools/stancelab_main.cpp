#include <iostream>

int main() {
  std::cout << "stancelab: CLI under construction\n";
  return 0;
}
