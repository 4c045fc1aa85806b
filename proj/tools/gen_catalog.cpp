// Writes the embedded diagram catalog to stdout.
#include <iostream>

#include "coxl2/classifier.hpp"

int main() {
  std::cout << coxl2::catalog_text();
  return 0;
}
