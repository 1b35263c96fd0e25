#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Controlador del subcomando `analyze`: enumera el código de una matriz generadora,
reporta espectros y distancias mínimas y, con --image, analiza el código imagen
(tamaño, distancia, linealidad con testigo y paridad de los pesos).
"""

import argparse
import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from Controlador.Reporte import Reporte, emitir, error_uso, formatear_tabla
from DAOs.MatrizDAO import MatrizDAO
from Modelo.Anillo import Metrica, Modulo, PalabraAnillo
from Modelo.Codigo import CodigoBloque, MatrizGeneradora, TestigoLinealidad
from Modelo.Errores import ErrorCapacidad
from Modelo.Mapa import NombreMapa, TipoMapa
from Servicios.AnilloServicio import add
from Servicios.CodigoServicio import CodigoServicio
from Servicios.GrayServicio import aplicar_mapa

log = logging.getLogger(__name__)

# --- Esquemas de Datos ---

class EspectroRespuesta(BaseModel):
    metrica: Metrica
    pesos: List[Tuple[int, int]]  # (peso, número de palabras), ordenado por peso
    distancia_minima: Optional[int]


class SuperposicionRespuesta(BaseModel):
    informacion: List[List[int]]
    palabras: List[List[int]]
    imagenes: List[List[int]]
    suma: List[int]
    pertenece: bool


class ImagenRespuesta(BaseModel):
    mapa: str
    modulo: int
    longitud: int
    tamano: int
    metrica: Metrica
    distancia_minima: Optional[int]
    distancia_origen: Optional[int]
    lineal: bool
    testigo: Optional[TestigoLinealidad]
    pesos_pares: bool
    espectro: List[Tuple[int, int]]
    palabras: Optional[List[List[int]]] = None
    superposicion: Optional[SuperposicionRespuesta] = None


class AnalisisRespuesta(BaseModel):
    modulo: int
    filas: int
    longitud: int
    tamano: int
    tasa_nominal: float
    tasa_efectiva: float
    espectros: List[EspectroRespuesta]
    palabras: Optional[List[List[int]]] = None
    imagen: Optional[ImagenRespuesta] = None


# --- Registro del subcomando ---

def registrar(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("analyze", help="Analiza el código generado por un archivo de matriz")
    parser.add_argument("archivo", help="Archivo 'mod <m> rows <k> cols <n>' con k filas")
    parser.add_argument("--image", dest="imagen", choices=[n.value for n in NombreMapa], help="Analiza también la imagen bajo el mapa")
    parser.add_argument(
        "--metric", dest="metricas", action="append", choices=[m.value for m in Metrica],
        help="Métrica a reportar (repetible); por defecto todas las válidas para el módulo",
    )
    parser.add_argument("--codewords", dest="listar", action="store_true", help="Lista las palabras en orden lexicográfico")
    parser.add_argument(
        "--superimpose", dest="superponer", nargs=2, metavar=("X", "Y"),
        help="Con --image: suma las imágenes de xG e yG y comprueba si la suma está en la imagen",
    )
    parser.add_argument("--json", action="store_true", help="Salida JSON")
    parser.set_defaults(funcion=cmd_analyze)


# --- Dependencia del Servicio ---

def get_codigo_servicio() -> CodigoServicio:
    return CodigoServicio()


# --- Helpers ---

def metricas_validas(modulo: Modulo) -> List[Metrica]:
    metricas = [Metrica.HAMMING]
    if modulo.m == 4:
        metricas.append(Metrica.LEE)
    metricas.append(Metrica.HOMOGENEA)
    return metricas


def mapa_para(nombre: str, modulo: Modulo) -> TipoMapa:
    nombre_mapa = NombreMapa(nombre)
    if nombre_mapa in (NombreMapa.PSI, NombreMapa.COMPUESTO):
        return TipoMapa(nombre=nombre_mapa, k=modulo.k)
    return TipoMapa(nombre=nombre_mapa)


def _distancia(servicio: CodigoServicio, C: CodigoBloque, metrica: Metrica, por_pares: bool = False) -> Optional[int]:
    if C.tamano < 2:
        return None
    if por_pares:
        return servicio.min_distance_pairwise(C, metrica)
    return servicio.min_distance(C, metrica)


def _pares(histograma: Dict[int, int]) -> List[Tuple[int, int]]:
    return sorted(histograma.items())


def superponer(
    servicio: CodigoServicio, G: MatrizGeneradora, imagen: CodigoBloque, mapa: TipoMapa, informacion: List[str]
) -> SuperposicionRespuesta:
    """Suma las imágenes de dos palabras del código dadas por sus palabras de información."""
    entradas = [PalabraAnillo.desde_texto(x, G.modulo) for x in informacion]
    palabras = [servicio.encode(G, x) for x in entradas]
    imagenes = [aplicar_mapa(mapa, c) for c in palabras]
    suma = add(*imagenes)
    return SuperposicionRespuesta(
        informacion=[list(x.valores) for x in entradas],
        palabras=[list(c.valores) for c in palabras],
        imagenes=[list(w.valores) for w in imagenes],
        suma=list(suma.valores),
        pertenece=imagen.contiene(suma),
    )


def analizar_imagen(
    servicio: CodigoServicio,
    G: MatrizGeneradora,
    C: CodigoBloque,
    mapa: TipoMapa,
    listar: bool,
    informacion: Optional[List[str]] = None,
) -> ImagenRespuesta:
    imagen = servicio.image_code(C, mapa)
    metrica = mapa.metrica_destino
    espectro = servicio.weight_spectrum(imagen, metrica)
    veredicto = servicio.check_linearity(imagen)
    return ImagenRespuesta(
        mapa=mapa.etiqueta(),
        modulo=imagen.modulo.m,
        longitud=imagen.longitud,
        tamano=imagen.tamano,
        metrica=metrica,
        distancia_minima=_distancia(servicio, imagen, metrica, por_pares=True),
        distancia_origen=_distancia(servicio, C, mapa.metrica_origen),
        lineal=veredicto.lineal,
        testigo=veredicto.testigo,
        pesos_pares=all(peso % 2 == 0 for peso in espectro.histograma),
        espectro=_pares(espectro.histograma),
        palabras=imagen.palabras.tolist() if listar else None,
        superposicion=superponer(servicio, G, imagen, mapa, informacion) if informacion else None,
    )


def analizar(servicio: CodigoServicio, args: argparse.Namespace) -> AnalisisRespuesta:
    if args.superponer and not args.imagen:
        raise ValueError("--superimpose requiere --image")
    G = MatrizDAO(args.archivo).leer()
    C = servicio.enumerate_code(G)

    metricas = [Metrica(m) for m in args.metricas] if args.metricas else metricas_validas(G.modulo)
    espectros = []
    for metrica in dict.fromkeys(metricas):
        espectro = servicio.weight_spectrum(C, metrica)
        espectros.append(EspectroRespuesta(
            metrica=metrica,
            pesos=_pares(espectro.histograma),
            distancia_minima=_distancia(servicio, C, metrica),
        ))

    return AnalisisRespuesta(
        modulo=G.modulo.m,
        filas=G.k,
        longitud=G.n,
        tamano=C.tamano,
        tasa_nominal=servicio.tasa_nominal(G),
        tasa_efectiva=servicio.tasa_efectiva(C),
        espectros=espectros,
        palabras=C.palabras.tolist() if args.listar else None,
        imagen=(
            analizar_imagen(servicio, G, C, mapa_para(args.imagen, G.modulo), args.listar, args.superponer)
            if args.imagen else None
        ),
    )


def _texto_nulo(valor: Optional[int]) -> str:
    return "indefinida" if valor is None else str(valor)


def renderizar(r: AnalisisRespuesta) -> str:
    partes = [
        f"Código sobre Z{r.modulo}: {r.filas} filas, longitud {r.longitud}, |C| = {r.tamano}",
        f"Tasa nominal k/n = {r.tasa_nominal:.4f}, tasa efectiva log_m|C|/n = {r.tasa_efectiva:.4f}",
        "",
        formatear_tabla(
            ["métrica", "distancia mínima", "espectro (peso:palabras)"],
            [
                (e.metrica.value, _texto_nulo(e.distancia_minima), " ".join(f"{p}:{c}" for p, c in e.pesos))
                for e in r.espectros
            ],
        ),
    ]
    if r.palabras is not None:
        partes += ["", "Palabras:"] + [",".join(str(x) for x in p) for p in r.palabras]
    if r.imagen is not None:
        im = r.imagen
        partes += [
            "",
            f"Imagen bajo {im.mapa}: Z{im.modulo}, longitud {im.longitud}, |imagen| = {im.tamano}",
            f"Distancia mínima ({im.metrica.value}, por pares) = {_texto_nulo(im.distancia_minima)}; "
            f"distancia del código original = {_texto_nulo(im.distancia_origen)}",
            f"Espectro: {' '.join(f'{p}:{c}' for p, c in im.espectro)}",
            f"Todos los pesos pares: {'sí' if im.pesos_pares else 'no'}",
        ]
        if im.lineal:
            partes.append("Linealidad: lineal")
        else:
            t = im.testigo
            if t.operacion == "suma":
                detalle = f"{t.a} + {t.b} = {t.resultado} no pertenece a la imagen"
            else:
                detalle = f"{t.escalar} * {t.a} = {t.resultado} no pertenece a la imagen"
            partes.append(f"Linealidad: no lineal; testigo {detalle}")
        if im.superposicion is not None:
            s = im.superposicion
            textos = [",".join(str(x) for x in w) for w in s.imagenes]
            suma = ",".join(str(x) for x in s.suma)
            partes.append(
                f"Superposición: {textos[0]} + {textos[1]} = {suma} "
                f"{'pertenece' if s.pertenece else 'no pertenece'} a la imagen"
            )
        if im.palabras is not None:
            partes += ["Palabras de la imagen:"] + [",".join(str(x) for x in p) for p in im.palabras]
    return "\n".join(partes)


# --- Comando ---

def cmd_analyze(args: argparse.Namespace) -> int:
    servicio = get_codigo_servicio()
    try:
        respuesta = analizar(servicio, args)
    except ErrorCapacidad as e:
        error_uso(e)
        return 1
    except ValueError as e:
        error_uso(e)
        return 2

    reporte = Reporte(
        command="analyze",
        inputs={
            "file": str(args.archivo),
            "image": args.imagen,
            "metrics": args.metricas,
            "codewords": args.listar,
            "superimpose": args.superponer,
        },
        results=respuesta.model_dump(mode="json"),
    )
    emitir(reporte, args.json, renderizar(respuesta))
    return 0
