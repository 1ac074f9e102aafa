"""Groebner bases, elimination, quotients and Hilbert series."""
from .hilbert import HilbertData, hilbert_data, hilbert_function_value
from .ideal import (GroebnerBasis, Ideal, buchberger, colon_variable, eliminate, ideal_quotient,
                    irrelevant_ideal, is_nonzerodivisor_variable, kernel_of_ring_map, normal_form,
                    saturate)
from .modules import (FreeModule, ModuleGroebnerBasis, minimal_module_generators, module_groebner,
                      vector_degree)

__all__ = [
    "Ideal", "GroebnerBasis", "buchberger", "normal_form", "eliminate", "ideal_quotient",
    "saturate", "kernel_of_ring_map", "colon_variable", "is_nonzerodivisor_variable",
    "irrelevant_ideal", "HilbertData", "hilbert_data", "hilbert_function_value", "FreeModule",
    "module_groebner", "ModuleGroebnerBasis", "minimal_module_generators", "vector_degree",
]
