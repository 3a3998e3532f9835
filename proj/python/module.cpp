#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_carthom, m) {
  m.doc() = "exact homology workbench bindings";
}
