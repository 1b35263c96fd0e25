# Modelo/Errores.py

from typing import Optional


class ErrorCapacidad(ValueError):
    """La enumeración pedida supera el límite configurado."""


class ErrorFormato(ValueError):
    """Archivo de matriz mal formado. Conserva el número de línea (1-based)."""

    def __init__(self, mensaje: str, linea: Optional[int] = None):
        self.linea = linea
        if linea is not None:
            mensaje = f"línea {linea}: {mensaje}"
        super().__init__(mensaje)
