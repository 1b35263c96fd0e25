#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Suite de verificación: reproduce las tablas de referencia, comprueba las
isometrías y las propiedades de los códigos imagen sobre el ejemplo de Z8 y
sobre matrices aleatorias.
"""
import logging
from itertools import product
from typing import Callable, List, Optional, Tuple

import numpy as np

from config.config_loader import Config
from Modelo.Anillo import Metrica, Modulo, PalabraAnillo, PalabraBinaria
from Modelo.Codigo import CodigoBloque, MatrizGeneradora
from Modelo.Mapa import TipoMapa
from Modelo.Referencia import (
    DISTANCIA_HAMMING_EJEMPLO,
    DISTANCIA_HOMOGENEA_EJEMPLO,
    MATRIZ_EJEMPLO_Z8,
    PAR_NO_LINEAL,
    TABLA_COMPUESTA_Z8,
    TABLA_PHI_INVERSA_RM12,
    TABLA_PHI_Z4_2,
    TABLA_PSI_Z8,
    TAMANO_EJEMPLO,
)
from Modelo.Verificacion import Chequeo
from Servicios.AnilloServicio import add, hamming_weight, hom_weight, lee_weight
from Servicios.CodigoServicio import CodigoServicio
from Servicios.GrayServicio import (
    composed_closed_form,
    composed_map,
    composed_map_general,
    phi,
    phi_inverse,
    psi,
    rm1_codewords,
)
from Servicios.IsometriaServicio import verify_isometry

log = logging.getLogger(__name__)

Z4 = Modulo(k=2)
Z8 = Modulo(k=3)


def _resultado(nombre: str, fallas: List[str], casos: int) -> Chequeo:
    if fallas:
        detalle = f"{len(fallas)} fallas de {casos} casos; primera: {fallas[0]}"
        return Chequeo(nombre=nombre, ok=False, detalle=detalle)
    return Chequeo(nombre=nombre, ok=True, detalle=f"{casos} casos")


class VerificacionServicio:
    """
    Ejecuta todos los chequeos y devuelve su resultado en orden fijo.
    Un chequeo que lanza una excepción cuenta como fallido.
    """

    def __init__(
        self,
        codigo_servicio: Optional[CodigoServicio] = None,
        semilla: Optional[int] = None,
        matrices_aleatorias: Optional[int] = None,
    ):
        self.codigos = codigo_servicio or CodigoServicio()
        self.semilla = Config.SEMILLA if semilla is None else semilla
        self.matrices_aleatorias = Config.MATRICES_ALEATORIAS if matrices_aleatorias is None else matrices_aleatorias
        self._ejemplo: Optional[CodigoBloque] = None
        self._imagen_ejemplo: Optional[CodigoBloque] = None

    # ------------------------------------------------------------
    # EJECUCIÓN
    # ------------------------------------------------------------
    def chequeos(self) -> List[Tuple[str, Callable[[], Chequeo]]]:
        return [
            ("table-phi", self._tabla_phi),
            ("table-phi-inverse", self._tabla_phi_inversa),
            ("table-psi", self._tabla_psi),
            ("table-composed", self._tabla_compuesta),
            ("phi-bijective", self._phi_biyectiva),
            ("psi-k2-equals-phi", self._psi_k2_es_phi),
            ("composed-closed-form", self._forma_cerrada),
            ("composed-general-k3", self._compuesta_general_k3),
            ("rm1-image-k2", lambda: self._imagen_rm1(2)),
            ("rm1-image-k3", lambda: self._imagen_rm1(3)),
            ("rm1-image-k4", lambda: self._imagen_rm1(4)),
            ("isometry-phi", lambda: self._isometria(TipoMapa.phi())),
            ("isometry-psi-k2", lambda: self._isometria(TipoMapa.psi(2))),
            ("isometry-psi-k3", lambda: self._isometria(TipoMapa.psi(3))),
            ("isometry-psi-k4", lambda: self._isometria(TipoMapa.psi(4))),
            ("isometry-composed-k3", lambda: self._isometria(TipoMapa.compuesto(3))),
            ("isometry-composed-k4", lambda: self._isometria(TipoMapa.compuesto(4))),
            ("distance-isometry-phi", lambda: self._isometria(TipoMapa.phi(), True)),
            ("distance-isometry-psi-k3", lambda: self._isometria(TipoMapa.psi(3), True)),
            ("distance-isometry-composed-k3", lambda: self._isometria(TipoMapa.compuesto(3), True)),
            ("distance-isometry-composed-k4", lambda: self._isometria(TipoMapa.compuesto(4), True)),
            ("example-code", self._codigo_ejemplo),
            ("linear-pairwise-agree", self._caminos_coinciden),
            ("proposition-i", self._proposicion_i),
            ("proposition-ii", self._proposicion_ii),
            ("proposition-iii", self._proposicion_iii),
            ("proposition-ii-random", self._proposicion_ii_aleatoria),
            ("nonlinearity-witness", self._testigo_no_linealidad),
        ]

    def ejecutar(self) -> List[Chequeo]:
        resultados = []
        for nombre, chequeo in self.chequeos():
            try:
                resultado = chequeo()
            except Exception as e:
                log.exception("El chequeo %s lanzó una excepción", nombre)
                resultado = Chequeo(nombre=nombre, ok=False, detalle=f"excepción: {e}")
            log.info("%s: %s", nombre, "OK" if resultado.ok else "FALLA")
            resultados.append(resultado)
        return resultados

    # ------------------------------------------------------------
    # CÓDIGO DE EJEMPLO (perezoso, se reutiliza entre chequeos)
    # ------------------------------------------------------------
    @property
    def ejemplo(self) -> CodigoBloque:
        if self._ejemplo is None:
            G = MatrizGeneradora(modulo=Z8, filas=MATRIZ_EJEMPLO_Z8)
            self._ejemplo = self.codigos.enumerate_code(G)
        return self._ejemplo

    @property
    def imagen_ejemplo(self) -> CodigoBloque:
        if self._imagen_ejemplo is None:
            self._imagen_ejemplo = self.codigos.image_code(self.ejemplo, TipoMapa.compuesto(3))
        return self._imagen_ejemplo

    # ------------------------------------------------------------
    # TABLAS
    # ------------------------------------------------------------
    def _tabla_phi(self) -> Chequeo:
        fallas = []
        for (x, y), (w_lee, imagen, w_ham) in TABLA_PHI_Z4_2.items():
            palabra = PalabraAnillo(modulo=Z4, valores=(x, y))
            obtenido = phi(palabra)
            if (lee_weight(palabra), obtenido.bits, hamming_weight(obtenido)) != (w_lee, imagen, w_ham):
                fallas.append(f"({x},{y}) -> {obtenido.texto()}")
        return _resultado("table-phi", fallas, len(TABLA_PHI_Z4_2))

    def _tabla_phi_inversa(self) -> Chequeo:
        fallas = []
        for u, (bits, esperado) in enumerate(TABLA_PHI_INVERSA_RM12):
            obtenido = phi_inverse(PalabraBinaria(bits=bits))
            if obtenido.valores != esperado or psi(u, 3).bits != bits:
                fallas.append(f"{bits} -> {obtenido.texto()}")
        return _resultado("table-phi-inverse", fallas, len(TABLA_PHI_INVERSA_RM12))

    def _tabla_psi(self) -> Chequeo:
        fallas = []
        for u, (w_hom, imagen, w_ham) in TABLA_PSI_Z8.items():
            obtenido = psi(u, 3)
            if (hom_weight(u, 3), obtenido.bits, hamming_weight(obtenido)) != (w_hom, imagen, w_ham):
                fallas.append(f"{u} -> {obtenido.texto()}")
        return _resultado("table-psi", fallas, len(TABLA_PSI_Z8))

    def _tabla_compuesta(self) -> Chequeo:
        fallas = []
        for u, (w_hom, imagen, w_lee) in TABLA_COMPUESTA_Z8.items():
            obtenido = composed_map(u)
            if (hom_weight(u, 3), obtenido.valores, lee_weight(obtenido)) != (w_hom, imagen, w_lee):
                fallas.append(f"{u} -> {obtenido.texto()}")
        return _resultado("table-composed", fallas, len(TABLA_COMPUESTA_Z8))

    # ------------------------------------------------------------
    # IDENTIDADES ESTRUCTURALES
    # ------------------------------------------------------------
    def _phi_biyectiva(self) -> Chequeo:
        fallas, casos = [], 0
        for n in range(1, 5):
            for valores in product(range(4), repeat=n):
                palabra = PalabraAnillo(modulo=Z4, valores=valores)
                casos += 1
                if phi_inverse(phi(palabra)) != palabra:
                    fallas.append(f"phi^-1(phi({palabra.texto()}))")
        for n in range(2, 9, 2):
            for bits in product((0, 1), repeat=n):
                binaria = PalabraBinaria(bits=bits)
                casos += 1
                if phi(phi_inverse(binaria)) != binaria:
                    fallas.append(f"phi(phi^-1({binaria.texto()}))")
        return _resultado("phi-bijective", fallas, casos)

    def _psi_k2_es_phi(self) -> Chequeo:
        fallas = [str(u) for u in range(4) if psi(u, 2) != phi(u)]
        return _resultado("psi-k2-equals-phi", fallas, 4)

    def _forma_cerrada(self) -> Chequeo:
        fallas = []
        for u in range(8):
            via_psi = phi_inverse(psi(u, 3))
            if not composed_map(u) == via_psi == composed_closed_form(u):
                fallas.append(f"{u}: {composed_map(u).texto()} / {via_psi.texto()} / {composed_closed_form(u).texto()}")
        return _resultado("composed-closed-form", fallas, 8)

    def _compuesta_general_k3(self) -> Chequeo:
        fallas = [str(u) for u in range(8) if composed_map_general(u, 3) != composed_map(u)]
        return _resultado("composed-general-k3", fallas, 8)

    def _imagen_rm1(self, k: int) -> Chequeo:
        nombre = f"rm1-image-k{k}"
        imagen = {psi(u, k) for u in range(1 << k)}
        rm1 = set(rm1_codewords(k - 1))
        fallas = [] if imagen == rm1 else [f"|psi(Z{1 << k})| = {len(imagen)}, |RM(1,{k - 1})| = {len(rm1)}"]
        if k == 3:
            pares = {
                PalabraBinaria(bits=bits)
                for bits in product((0, 1), repeat=4)
                if sum(bits) % 2 == 0
            }
            if imagen != pares:
                fallas.append("la imagen de psi no coincide con las palabras de peso par de F2^4")
        return _resultado(nombre, fallas, 1 << k)

    def _isometria(self, mapa: TipoMapa, por_distancia: bool = False) -> Chequeo:
        reporte = verify_isometry(mapa, mapa.metrica_origen, mapa.metrica_destino, por_distancia)
        prefijo = "distance-isometry" if por_distancia else "isometry"
        nombre = f"{prefijo}-{mapa.nombre.value}" + (f"-k{mapa.k}" if mapa.k else "")
        fallas = [
            f"{v.entrada}: {v.valor_origen} != {v.valor_destino}" for v in reporte.violaciones
        ]
        return _resultado(nombre, fallas, reporte.casos_revisados)

    # ------------------------------------------------------------
    # CÓDIGO DE EJEMPLO Y PROPOSICIONES
    # ------------------------------------------------------------
    def _codigo_ejemplo(self) -> Chequeo:
        C = self.ejemplo
        obtenido = (
            C.tamano,
            self.codigos.min_distance(C, Metrica.HAMMING),
            self.codigos.min_distance(C, Metrica.HOMOGENEA),
        )
        esperado = (TAMANO_EJEMPLO, DISTANCIA_HAMMING_EJEMPLO, DISTANCIA_HOMOGENEA_EJEMPLO)
        fallas = [] if obtenido == esperado else [f"(|C|, d_H, d_hom) = {obtenido}, se esperaba {esperado}"]
        return _resultado("example-code", fallas, 1)

    def _caminos_coinciden(self) -> Chequeo:
        fallas = []
        for metrica in (Metrica.HAMMING, Metrica.HOMOGENEA):
            lineal = self.codigos.min_distance_linear(self.ejemplo, metrica)
            pares = self.codigos.min_distance_pairwise(self.ejemplo, metrica)
            if lineal != pares:
                fallas.append(f"{metrica.value}: {lineal} != {pares}")
        return _resultado("linear-pairwise-agree", fallas, 2)

    def _proposicion_i(self) -> Chequeo:
        C, imagen = self.ejemplo, self.imagen_ejemplo
        fallas = []
        if imagen.longitud != 2 * C.longitud:
            fallas.append(f"longitud {imagen.longitud} != {2 * C.longitud}")
        if imagen.tamano != C.tamano:
            fallas.append(f"|imagen| = {imagen.tamano} != |C| = {C.tamano}")
        if imagen.modulo != Z4:
            fallas.append(f"la imagen está sobre {imagen.modulo}")
        return _resultado("proposition-i", fallas, 1)

    def _proposicion_ii(self) -> Chequeo:
        d_hom = self.codigos.min_distance(self.ejemplo, Metrica.HOMOGENEA)
        d_lee = self.codigos.min_distance_pairwise(self.imagen_ejemplo, Metrica.LEE)
        fallas = [] if d_hom == d_lee else [f"d_Lee(imagen) = {d_lee} != d_hom(C) = {d_hom}"]
        return _resultado("proposition-ii", fallas, 1)

    def _impares_lee(self, imagen: CodigoBloque) -> List[str]:
        pesos = self.codigos.pesos(imagen, Metrica.LEE)
        return [
            ",".join(str(x) for x in palabra)
            for palabra, peso in zip(imagen.palabras.tolist(), pesos.tolist())
            if peso % 2
        ]

    def _proposicion_iii(self) -> Chequeo:
        return _resultado("proposition-iii", self._impares_lee(self.imagen_ejemplo), self.imagen_ejemplo.tamano)

    def _proposicion_ii_aleatoria(self) -> Chequeo:
        rng = np.random.default_rng(self.semilla)
        mapa = TipoMapa.compuesto(3)
        fallas, probadas = [], 0
        while probadas < self.matrices_aleatorias:
            k, n = int(rng.integers(1, 3)), int(rng.integers(1, 5))
            G = self.codigos.random_generator_matrix(rng, Z8, k, n)
            C = self.codigos.enumerate_code(G)
            if C.tamano < 2:
                continue
            probadas += 1
            imagen = self.codigos.image_code(C, mapa)
            d_hom = self.codigos.min_distance(C, Metrica.HOMOGENEA)
            d_lee = self.codigos.min_distance_pairwise(imagen, Metrica.LEE)
            if d_hom != d_lee or imagen.tamano != C.tamano:
                fallas.append(f"{G.filas}: d_hom = {d_hom}, d_Lee = {d_lee}")
            impares = self._impares_lee(imagen)
            if impares:
                fallas.append(f"{G.filas}: peso de Lee impar en {impares[0]}")
        return _resultado("proposition-ii-random", fallas, probadas)

    def _testigo_no_linealidad(self) -> Chequeo:
        C, imagen = self.ejemplo, self.imagen_ejemplo
        G = C.procedencia.generadora
        fallas = []
        imagenes = []
        for informacion, palabra, esperada in PAR_NO_LINEAL:
            c = self.codigos.encode(G, PalabraAnillo(modulo=Z8, valores=informacion))
            if c.valores != palabra:
                fallas.append(f"{informacion}G = {c.texto()}")
            w = composed_map(c)
            if w.valores != esperada:
                fallas.append(f"imagen de {c.texto()} = {w.texto()}")
            imagenes.append(w)
        suma = add(*imagenes)
        if imagen.contiene(suma):
            fallas.append(f"la suma {suma.texto()} pertenece a la imagen")
        veredicto = self.codigos.check_linearity(imagen)
        if veredicto.lineal:
            fallas.append("la imagen resultó lineal")
        elif not veredicto.testigo.verificar(imagen):
            fallas.append(f"el testigo {veredicto.testigo} no se verifica")
        return _resultado("nonlinearity-witness", fallas, 1)
