#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Aritmética de palabras sobre Z_{2^k}, expansión 2-ádica y los tres pesos.

Todas las funciones son puras sobre valores inmutables. La distancia entre dos
palabras es siempre el peso de su diferencia, para las tres métricas.
"""
from functools import lru_cache
from typing import Union

import numpy as np

from Modelo.Anillo import (
    K_MAXIMO,
    ExpansionBinaria,
    Metrica,
    Modulo,
    PalabraAnillo,
    PalabraBinaria,
)

Z4 = Modulo(k=2)

# Peso de Lee en Z4: min(x, 4 - x)
_PESOS_LEE_Z4 = (0, 1, 2, 1)


# ------------------------------------------------------------
# VALIDACIONES
# ------------------------------------------------------------
def _validar_residuo(x: int, m: int) -> None:
    if not 0 <= x < m:
        raise ValueError(f"El residuo {x} no está en [0, {m})")


def _validar_k(k: int) -> None:
    if not 1 <= k <= K_MAXIMO:
        raise ValueError(f"k={k} fuera de rango [1, {K_MAXIMO}]")


def _validar_compatibles(a: PalabraAnillo, b: PalabraAnillo) -> None:
    if a.modulo != b.modulo:
        raise ValueError(f"Módulos distintos: {a.modulo} y {b.modulo}")
    if len(a) != len(b):
        raise ValueError(f"Longitudes distintas: {len(a)} y {len(b)}")


# ------------------------------------------------------------
# EXPANSIÓN 2-ÁDICA
# ------------------------------------------------------------
def two_adic_expansion(u: int, k: int) -> ExpansionBinaria:
    """u = sum 2^(i-1) u_i, devuelve exactamente k bits (u_1 primero)."""
    _validar_k(k)
    _validar_residuo(u, 1 << k)
    return ExpansionBinaria(bits=tuple((u >> i) & 1 for i in range(k)))


# ------------------------------------------------------------
# PESOS
# ------------------------------------------------------------
def hamming_weight(w: Union[PalabraAnillo, PalabraBinaria]) -> int:
    componentes = w.bits if isinstance(w, PalabraBinaria) else w.valores
    return sum(1 for x in componentes if x != 0)


def lee_weight(x: Union[int, PalabraAnillo]) -> int:
    """Peso de Lee, definido sólo sobre Z4; sobre palabras es la suma por componente."""
    if isinstance(x, PalabraAnillo):
        if x.modulo != Z4:
            raise ValueError(f"El peso de Lee sólo está definido sobre Z4, no sobre {x.modulo}")
        return sum(_PESOS_LEE_Z4[v] for v in x.valores)
    _validar_residuo(x, 4)
    return _PESOS_LEE_Z4[x]


def _hom_simbolo(x: int, k: int) -> int:
    if x == 0:
        return 0
    if x == 1 << (k - 1):
        return 1 << (k - 1)
    return 1 << (k - 2)


def hom_weight(x: Union[int, PalabraAnillo], k: int = 3) -> int:
    """
    Peso homogéneo sobre Z_{2^k}: 0 en 0, 2^(k-1) en 2^(k-1), 2^(k-2) en el resto.
    Para k=3 es 0 / 4 / 2. Sobre palabras, k sale del módulo de la palabra.
    """
    if isinstance(x, PalabraAnillo):
        k = x.modulo.k
        return sum(_hom_simbolo(v, k) for v in x.valores)
    _validar_k(k)
    _validar_residuo(x, 1 << k)
    return _hom_simbolo(x, k)


def weight(w: PalabraAnillo, metrica: Metrica) -> int:
    if metrica == Metrica.HAMMING:
        return hamming_weight(w)
    if metrica == Metrica.LEE:
        return lee_weight(w)
    return hom_weight(w)


@lru_cache(maxsize=None)
def tabla_pesos(modulo: Modulo, metrica: Metrica) -> np.ndarray:
    """Peso de cada residuo de Z_m como arreglo indexable, para cálculos vectorizados."""
    if metrica == Metrica.LEE and modulo != Z4:
        raise ValueError(f"El peso de Lee sólo está definido sobre Z4, no sobre {modulo}")
    if metrica == Metrica.HAMMING:
        valores = [0] + [1] * (modulo.m - 1)
    elif metrica == Metrica.LEE:
        valores = list(_PESOS_LEE_Z4)
    else:
        valores = [_hom_simbolo(x, modulo.k) for x in range(modulo.m)]
    tabla = np.array(valores, dtype=np.int64)
    tabla.setflags(write=False)
    return tabla


# ------------------------------------------------------------
# ARITMÉTICA DE PALABRAS
# ------------------------------------------------------------
def add(a: PalabraAnillo, b: PalabraAnillo) -> PalabraAnillo:
    _validar_compatibles(a, b)
    m = a.modulo.m
    return PalabraAnillo(modulo=a.modulo, valores=tuple((x + y) % m for x, y in zip(a.valores, b.valores)))


def scalar_mul(s: int, a: PalabraAnillo) -> PalabraAnillo:
    m = a.modulo.m
    return PalabraAnillo(modulo=a.modulo, valores=tuple((s * x) % m for x in a.valores))


def negate(a: PalabraAnillo) -> PalabraAnillo:
    return scalar_mul(-1, a)


def subtract(a: PalabraAnillo, b: PalabraAnillo) -> PalabraAnillo:
    return add(a, negate(b))


def distance(a: PalabraAnillo, b: PalabraAnillo, metrica: Metrica) -> int:
    """d(a, b) = peso(a - b)."""
    return weight(subtract(a, b), metrica)
