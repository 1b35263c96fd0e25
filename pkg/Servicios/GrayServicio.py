#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Isometrías de Gray: phi, su inversa, el mapa generalizado psi y la composición phi^-1 psi.

Convención de orden: las entradas y = (y_1, ..., y_{k-1}) de una función booleana se
listan con y_1 variando más rápido, p. ej. (0,0), (1,0), (0,1), (1,1) para k=3.
Todas las extensiones a palabras concatenan las imágenes símbolo a símbolo.
"""
import logging
from functools import lru_cache
from typing import List, Optional, Union

import numpy as np

from Modelo.Anillo import Modulo, PalabraAnillo, PalabraBinaria
from Modelo.Mapa import ListadoFuncionBooleana, NombreMapa, TipoMapa
from Servicios.AnilloServicio import two_adic_expansion

log = logging.getLogger(__name__)

Z4 = Modulo(k=2)
Z8 = Modulo(k=3)

_PHI = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
_PHI_INVERSA = {par: x for x, par in _PHI.items()}


@lru_cache(maxsize=None)
def _entradas_booleanas(m: int) -> np.ndarray:
    """Todas las y en F2^m, fila j con y_i = bit (i-1) de j (y_1 el más rápido)."""
    j = np.arange(1 << m, dtype=np.int64)[:, None]
    entradas = (j >> np.arange(m, dtype=np.int64)) & 1
    entradas.setflags(write=False)
    return entradas


# ------------------------------------------------------------
# PHI Y SU INVERSA
# ------------------------------------------------------------
def phi(x: Union[int, PalabraAnillo]) -> PalabraBinaria:
    """0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10; sobre palabras de Z4 de longitud n da 2n bits."""
    if isinstance(x, PalabraAnillo):
        if x.modulo != Z4:
            raise ValueError(f"phi está definida sobre Z4, no sobre {x.modulo}")
        return PalabraBinaria(bits=tuple(b for v in x.valores for b in _PHI[v]))
    if x not in _PHI:
        raise ValueError(f"El residuo {x} no está en Z4")
    return PalabraBinaria(bits=_PHI[x])


def phi_inverse(b: PalabraBinaria) -> PalabraAnillo:
    """Inversa de phi sobre toda palabra binaria de longitud par."""
    if len(b) % 2:
        raise ValueError(f"phi^-1 requiere longitud par, recibió {len(b)}")
    pares = zip(b.bits[0::2], b.bits[1::2])
    return PalabraAnillo(modulo=Z4, valores=tuple(_PHI_INVERSA[par] for par in pares))


# ------------------------------------------------------------
# MAPA DE GRAY GENERALIZADO
# ------------------------------------------------------------
def boolean_function_listing(u: int, k: int) -> ListadoFuncionBooleana:
    """Valores de y -> u_k + sum_{i<k} u_i y_i sobre F2^(k-1)."""
    if k < 2:
        raise ValueError("psi requiere k >= 2")
    bits = two_adic_expansion(u, k).bits
    lineal = np.array(bits[:-1], dtype=np.int64)
    valores = (_entradas_booleanas(k - 1) @ lineal + bits[-1]) & 1
    return ListadoFuncionBooleana(k=k, valores=PalabraBinaria(bits=tuple(valores.tolist())))


def psi(u: Union[int, PalabraAnillo], k: Optional[int] = None) -> PalabraBinaria:
    """
    Mapa de Gray generalizado Z_{2^k} -> F2^(2^(k-1)). Con una palabra, k sale de su
    módulo y las imágenes se concatenan.
    """
    if isinstance(u, PalabraAnillo):
        if k is not None and k != u.modulo.k:
            raise ValueError(f"k={k} no coincide con el módulo {u.modulo}")
        k = u.modulo.k
        bits = tuple(b for v in u.valores for b in boolean_function_listing(v, k).valores.bits)
        return PalabraBinaria(bits=bits)
    if k is None:
        raise ValueError("psi sobre un residuo requiere k")
    return boolean_function_listing(u, k).valores


# ------------------------------------------------------------
# COMPOSICIÓN phi^-1 psi
# ------------------------------------------------------------
def composed_closed_form(u: int) -> PalabraAnillo:
    """(u_1 + 2u_3, u_1 + 2u_3 + 2u_2) sobre Z4, para u en Z8."""
    e = two_adic_expansion(u, 3)
    a = (e.bit(1) + 2 * e.bit(3)) % 4
    return PalabraAnillo(modulo=Z4, valores=(a, (a + 2 * e.bit(2)) % 4))


def composed_map_general(u: Union[int, PalabraAnillo], k: Optional[int] = None) -> PalabraAnillo:
    """phi^-1(psi(u)): Z_{2^k} -> Z4^(2^(k-2)), k >= 3."""
    if isinstance(u, PalabraAnillo):
        k = u.modulo.k if k is None else k
    if k is None or k < 3:
        raise ValueError(f"La composición requiere k >= 3, recibió k={k}")
    return phi_inverse(psi(u, k))


def composed_map(u: Union[int, PalabraAnillo]) -> PalabraAnillo:
    """phi^-1 psi sobre Z8; una palabra de longitud n da 2n símbolos de Z4."""
    if isinstance(u, PalabraAnillo) and u.modulo != Z8:
        raise ValueError(f"composed_map está definido sobre Z8, no sobre {u.modulo}")
    return composed_map_general(u, 3)


# ------------------------------------------------------------
# REED-MULLER DE ORDEN 1
# ------------------------------------------------------------
def rm1_codewords(m: int) -> List[PalabraBinaria]:
    """
    Las 2^(m+1) funciones afines sobre F2^m, recorriendo los coeficientes
    (a_1..a_m, c) como los bits de un entero: a_1 el menos significativo.
    """
    if m < 1:
        raise ValueError("RM(1, m) requiere m >= 1")
    entradas = _entradas_booleanas(m)
    palabras = []
    for indice in range(1 << (m + 1)):
        coeficientes = np.array([(indice >> i) & 1 for i in range(m)], dtype=np.int64)
        constante = (indice >> m) & 1
        valores = (entradas @ coeficientes + constante) & 1
        palabras.append(PalabraBinaria(bits=tuple(valores.tolist())))
    return palabras


# ------------------------------------------------------------
# DESPACHO GENÉRICO POR TIPO DE MAPA
# ------------------------------------------------------------
def aplicar_mapa(mapa: TipoMapa, palabra: PalabraAnillo) -> PalabraAnillo:
    """Aplica el mapa a una palabra del dominio; la imagen binaria se devuelve sobre Z2."""
    if palabra.modulo != mapa.modulo_dominio:
        raise ValueError(f"{mapa.etiqueta()} espera palabras sobre {mapa.modulo_dominio}, no sobre {palabra.modulo}")
    if mapa.nombre == NombreMapa.PHI:
        return phi(palabra).como_palabra_anillo()
    if mapa.nombre == NombreMapa.PHI_INVERSA:
        return phi_inverse(PalabraBinaria(bits=palabra.valores))
    if mapa.nombre == NombreMapa.PSI:
        return psi(palabra).como_palabra_anillo()
    return composed_map_general(palabra)


def simbolos_dominio(mapa: TipoMapa) -> List[PalabraAnillo]:
    """Cada símbolo del dominio como palabra (pares de bits para phi-inv)."""
    modulo = mapa.modulo_dominio
    if mapa.simbolos_entrada == 2:
        return [PalabraAnillo(modulo=modulo, valores=(i >> 1, i & 1)) for i in range(4)]
    return [PalabraAnillo(modulo=modulo, valores=(u,)) for u in range(modulo.m)]


@lru_cache(maxsize=None)
def tabla_simbolos(mapa: TipoMapa) -> np.ndarray:
    """
    Imagen de cada símbolo del dominio como fila de un arreglo, para aplicar el mapa a
    códigos completos con indexación. Para phi-inv el índice del par (b1, b2) es 2*b1 + b2.
    """
    filas = [aplicar_mapa(mapa, s).valores for s in simbolos_dominio(mapa)]
    tabla = np.array(filas, dtype=np.int64)
    tabla.setflags(write=False)
    log.debug("Tabla de símbolos de %s: %s", mapa.etiqueta(), tabla.tolist())
    return tabla
