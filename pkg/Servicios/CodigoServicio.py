#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Capa de Servicio para códigos de bloque sobre Z_m.

Enumera códigos lineales desde su matriz generadora, calcula espectros de pesos y
distancias mínimas, construye códigos imagen bajo las isometrías de Gray y decide
la linealidad de un conjunto de palabras con un testigo verificable.
"""
import logging
import math
from typing import Optional

import numpy as np

from config.config_loader import Config
from Modelo.Anillo import Metrica, Modulo, PalabraAnillo
from Modelo.Codigo import (
    CodigoBloque,
    DesdeGeneradora,
    EspectroPesos,
    ImagenBajo,
    MatrizGeneradora,
    TestigoLinealidad,
    VeredictoLinealidad,
)
from Modelo.Errores import ErrorCapacidad
from Modelo.Mapa import TipoMapa
from Servicios.AnilloServicio import tabla_pesos
from Servicios.GrayServicio import tabla_simbolos

log = logging.getLogger(__name__)

# Palabras de información procesadas por bloque al enumerar
_BLOQUE_ENUMERACION = 1 << 16


class CodigoServicio:
    """
    Servicio de análisis de códigos. El único estado es el límite de enumeración,
    tomado de Config si no se indica otro.
    """

    def __init__(self, capacidad: Optional[int] = None):
        self.capacidad = Config.CAPACIDAD_ENUMERACION if capacidad is None else capacidad
        if self.capacidad < 1:
            raise ValueError("La capacidad de enumeración debe ser positiva")

    # ------------------------------------------------------------
    # VALIDACIONES
    # ------------------------------------------------------------
    @staticmethod
    def _validar_metrica(modulo: Modulo, metrica: Metrica) -> None:
        if metrica == Metrica.LEE and modulo.m != 4:
            raise ValueError(f"La métrica de Lee requiere Z4, el código está sobre {modulo}")

    # ------------------------------------------------------------
    # ENUMERACIÓN
    # ------------------------------------------------------------
    def encode(self, G: MatrizGeneradora, informacion: PalabraAnillo) -> PalabraAnillo:
        """La palabra xG para la palabra de información x."""
        if informacion.modulo != G.modulo or len(informacion) != G.k:
            raise ValueError(f"La palabra de información debe tener {G.k} residuos sobre {G.modulo}")
        x = np.array(informacion.valores, dtype=np.int64)
        valores = (x @ G.como_arreglo()) % G.modulo.m
        return PalabraAnillo(modulo=G.modulo, valores=tuple(valores.tolist()))

    def enumerate_code(self, G: MatrizGeneradora) -> CodigoBloque:
        """
        Recorre las m^k palabras de información y devuelve { xG } sin repeticiones.
        Lanza ErrorCapacidad si m^k supera la capacidad configurada.
        """
        m, k = G.modulo.m, G.k
        total = m ** k
        if total > self.capacidad:
            log.warning("Enumeración rechazada: %d^%d palabras de información > %d", m, k, self.capacidad)
            raise ErrorCapacidad(
                f"La enumeración requiere {m}^{k} = {total} palabras de información, "
                f"el límite es {self.capacidad}"
            )

        matriz = G.como_arreglo()
        pesos_posicion = np.array([m ** (k - 1 - i) for i in range(k)], dtype=np.int64)
        bloques = []
        for inicio in range(0, total, _BLOQUE_ENUMERACION):
            indices = np.arange(inicio, min(inicio + _BLOQUE_ENUMERACION, total), dtype=np.int64)
            informacion = (indices[:, None] // pesos_posicion) % m
            bloques.append(np.unique((informacion @ matriz) % m, axis=0))

        palabras = np.concatenate(bloques) if len(bloques) > 1 else bloques[0]
        codigo = CodigoBloque.desde_palabras(G.modulo, palabras, DesdeGeneradora(G))
        log.info("Código enumerado: %s (%d palabras de información)", codigo, total)
        return codigo

    # ------------------------------------------------------------
    # PESOS Y DISTANCIAS
    # ------------------------------------------------------------
    def pesos(self, C: CodigoBloque, metrica: Metrica) -> np.ndarray:
        """Peso de cada palabra, en el orden del código."""
        self._validar_metrica(C.modulo, metrica)
        return tabla_pesos(C.modulo, metrica)[C.palabras].sum(axis=1)

    def weight_spectrum(self, C: CodigoBloque, metrica: Metrica) -> EspectroPesos:
        valores, conteos = np.unique(self.pesos(C, metrica), return_counts=True)
        return EspectroPesos(
            metrica=metrica,
            histograma={int(p): int(c) for p, c in zip(valores, conteos)},
        )

    def min_distance(self, C: CodigoBloque, metrica: Metrica) -> int:
        """
        Para códigos generados por matriz: peso mínimo no nulo. Para el resto:
        mínimo de d(x, y) = peso(x - y) sobre todos los pares.
        """
        if C.tamano < 2:
            raise ValueError("La distancia mínima requiere al menos dos palabras")
        if C.lineal_por_construccion:
            return self.min_distance_linear(C, metrica)
        return self.min_distance_pairwise(C, metrica)

    def min_distance_linear(self, C: CodigoBloque, metrica: Metrica) -> int:
        pesos = self.pesos(C, metrica)
        no_nulas = C.palabras.any(axis=1)
        if not no_nulas.any():
            raise ValueError("El código no tiene palabras no nulas")
        return int(pesos[no_nulas].min())

    def min_distance_pairwise(self, C: CodigoBloque, metrica: Metrica) -> int:
        """Recorrido O(|C|^2) de todos los pares no ordenados."""
        if C.tamano < 2:
            raise ValueError("La distancia mínima requiere al menos dos palabras")
        self._validar_metrica(C.modulo, metrica)
        tabla = tabla_pesos(C.modulo, metrica)
        m = C.modulo.m
        palabras = C.palabras
        minimo = None
        for i in range(C.tamano - 1):
            diferencias = (palabras[i + 1:] - palabras[i]) % m
            candidato = int(tabla[diferencias].sum(axis=1).min())
            if minimo is None or candidato < minimo:
                minimo = candidato
        return minimo

    # ------------------------------------------------------------
    # CÓDIGOS IMAGEN
    # ------------------------------------------------------------
    def image_code(self, C: CodigoBloque, mapa: TipoMapa) -> CodigoBloque:
        """Imagen de C bajo la extensión símbolo a símbolo del mapa."""
        if C.modulo != mapa.modulo_dominio:
            raise ValueError(
                f"{mapa.etiqueta()} está definido sobre {mapa.modulo_dominio}, el código está sobre {C.modulo}"
            )
        tabla = tabla_simbolos(mapa)
        palabras = C.palabras
        if mapa.simbolos_entrada == 2:
            if C.longitud % 2:
                raise ValueError(f"{mapa.etiqueta()} requiere longitud par, el código mide {C.longitud}")
            palabras = palabras[:, 0::2] * 2 + palabras[:, 1::2]
        imagen = tabla[palabras].reshape(C.tamano, -1)
        codigo = CodigoBloque.desde_palabras(mapa.modulo_imagen, imagen, ImagenBajo(mapa, C))
        log.info("Imagen bajo %s: %s", mapa.etiqueta(), codigo)
        return codigo

    # ------------------------------------------------------------
    # LINEALIDAD
    # ------------------------------------------------------------
    @staticmethod
    def _tamano_subgrupo_generado(C: CodigoBloque) -> Optional[int]:
        """
        Tamaño del subgrupo aditivo generado por las palabras de C, o None en cuanto
        lo supera (entonces C no es cerrado bajo la suma).
        """
        m = C.modulo.m
        generado = {np.zeros(C.longitud, dtype=np.int64).tobytes()}
        elementos = [np.zeros(C.longitud, dtype=np.int64)]
        for palabra in C.palabras:
            if palabra.tobytes() in generado:
                continue
            actuales = np.array(elementos)
            for j in range(1, m):
                for nueva in (actuales + j * palabra) % m:
                    clave = nueva.tobytes()
                    if clave not in generado:
                        generado.add(clave)
                        elementos.append(nueva)
                if len(generado) > C.tamano:
                    return None
        return len(generado)

    @staticmethod
    def _testigo_suma(C: CodigoBloque) -> Optional[TestigoLinealidad]:
        m = C.modulo.m
        palabras = C.palabras
        for i in range(C.tamano):
            sumas = (palabras[i] + palabras[i:]) % m
            for desplazamiento, suma in enumerate(sumas):
                if not C.contiene(suma):
                    return TestigoLinealidad(
                        operacion="suma",
                        a=tuple(palabras[i].tolist()),
                        b=tuple(palabras[i + desplazamiento].tolist()),
                        resultado=tuple(suma.tolist()),
                    )
        return None

    @staticmethod
    def _testigo_escalar(C: CodigoBloque) -> Optional[TestigoLinealidad]:
        m = C.modulo.m
        for s in range(m):
            productos = (s * C.palabras) % m
            for palabra, producto in zip(C.palabras, productos):
                if not C.contiene(producto):
                    return TestigoLinealidad(
                        operacion="escalar",
                        a=tuple(palabra.tolist()),
                        escalar=s,
                        resultado=tuple(producto.tolist()),
                    )
        return None

    def check_linearity(self, C: CodigoBloque) -> VeredictoLinealidad:
        """
        Lineal si y sólo si C es cerrado bajo la suma de pares y bajo todos los
        múltiplos escalares. Un veredicto no lineal incluye el testigo.
        """
        testigo = None
        if self._tamano_subgrupo_generado(C) != C.tamano:
            testigo = self._testigo_suma(C)
        if testigo is None:
            testigo = self._testigo_escalar(C)

        if testigo is None:
            log.info("%s es lineal", C)
            return VeredictoLinealidad(lineal=True)
        log.info("%s no es lineal: %s", C, testigo)
        return VeredictoLinealidad(lineal=False, testigo=testigo)

    # ------------------------------------------------------------
    # TASAS
    # ------------------------------------------------------------
    @staticmethod
    def tasa_nominal(G: MatrizGeneradora) -> float:
        """k / n."""
        return G.k / G.n

    @staticmethod
    def tasa_efectiva(C: CodigoBloque) -> float:
        """log_m |C| / n."""
        return math.log(C.tamano, C.modulo.m) / C.longitud

    # ------------------------------------------------------------
    # MATRICES ALEATORIAS
    # ------------------------------------------------------------
    @staticmethod
    def random_generator_matrix(rng: np.random.Generator, modulo: Modulo, k: int, n: int) -> MatrizGeneradora:
        filas = rng.integers(0, modulo.m, size=(k, n))
        return MatrizGeneradora(modulo=modulo, filas=tuple(tuple(f) for f in filas.tolist()))
