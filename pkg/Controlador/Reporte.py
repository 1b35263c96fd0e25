#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Esquema común de salida de los comandos: JSON determinista (claves ordenadas)
o tabla de texto alineada.
"""
import json
import sys
from typing import Any, Dict, List, Sequence

from pydantic import BaseModel, Field


class Reporte(BaseModel):
    command: str = Field(..., description="Subcomando ejecutado")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Parámetros de entrada")
    results: Dict[str, Any] = Field(default_factory=dict, description="Resultados del comando")

    def a_json(self) -> str:
        return serializar_json(self.model_dump(mode="json"))


def serializar_json(datos: Any) -> str:
    return json.dumps(datos, sort_keys=True, ensure_ascii=False, indent=2)


def formatear_tabla(encabezados: Sequence[str], filas: Sequence[Sequence[Any]]) -> str:
    """Tabla con columnas alineadas a la izquierda y una línea separadora."""
    celdas: List[List[str]] = [[str(c) for c in encabezados]] + [[str(c) for c in fila] for fila in filas]
    anchos = [max(len(fila[i]) for fila in celdas) for i in range(len(encabezados))]
    lineas = ["  ".join(c.ljust(a) for c, a in zip(fila, anchos)).rstrip() for fila in celdas]
    lineas.insert(1, "  ".join("-" * a for a in anchos))
    return "\n".join(lineas)


def emitir(reporte: Reporte, como_json: bool, texto: str) -> None:
    print(reporte.a_json() if como_json else texto, file=sys.stdout)


def error_uso(mensaje: Any) -> None:
    print(f"[ERROR] {mensaje}", file=sys.stderr)
