#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Controlador del subcomando `map`: evalúa una isometría de Gray sobre una palabra
o imprime la tabla completa de un símbolo con ambos pesos.
"""

import argparse
from typing import List, Optional

from pydantic import BaseModel, Field

from Controlador.Reporte import Reporte, emitir, error_uso, formatear_tabla
from Modelo.Anillo import Metrica, Modulo, PalabraAnillo, PalabraBinaria
from Modelo.Mapa import NombreMapa, TipoMapa
from Servicios.AnilloServicio import weight
from Servicios.GrayServicio import aplicar_mapa, rm1_codewords, simbolos_dominio

ETIQUETAS_PESO = {Metrica.HAMMING: "w_H", Metrica.LEE: "w_L", Metrica.HOMOGENEA: "w_hom"}

# --- Esquemas de Datos ---

class FilaMapaRespuesta(BaseModel):
    entrada: str = Field(..., description="Palabra del dominio")
    imagen: str = Field(..., description="Imagen bajo el mapa")
    peso_origen: int
    peso_destino: int


class MapaRespuesta(BaseModel):
    mapa: str
    metrica_origen: Metrica
    metrica_destino: Metrica
    filas: List[FilaMapaRespuesta]


# --- Registro del subcomando ---

def registrar(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("map", help="Evalúa phi, phi-inv, psi o composed")
    parser.add_argument("nombre", choices=[n.value for n in NombreMapa], help="Mapa a evaluar")
    parser.add_argument("palabra", nargs="?", help="Palabra de entrada: '6,6,6' o bits '0110' para phi-inv")
    parser.add_argument("--k", type=int, default=None, help="Exponente de Z_{2^k} para psi y composed (por defecto 3)")
    parser.add_argument("--all", dest="todo", action="store_true", help="Imprime la tabla completa de un símbolo")
    parser.add_argument("--json", action="store_true", help="Salida JSON")
    parser.set_defaults(funcion=cmd_map)


# --- Helpers ---

def construir_mapa(nombre: str, k: Optional[int]) -> TipoMapa:
    nombre_mapa = NombreMapa(nombre)
    if nombre_mapa in (NombreMapa.PSI, NombreMapa.COMPUESTO) and k is None:
        k = 3
    return TipoMapa(nombre=nombre_mapa, k=k)


def leer_palabra(mapa: TipoMapa, texto: str) -> PalabraAnillo:
    if mapa.nombre == NombreMapa.PHI_INVERSA:
        binaria = PalabraBinaria.desde_texto(texto)
        if len(binaria) % 2:
            raise ValueError(f"phi-inv requiere una palabra de longitud par, '{texto}' mide {len(binaria)}")
        return binaria.como_palabra_anillo()
    return PalabraAnillo.desde_texto(texto, mapa.modulo_dominio)


def texto_palabra(palabra: PalabraAnillo) -> str:
    # Las palabras binarias se escriben contiguas
    if palabra.modulo == Modulo(k=1):
        return "".join(str(b) for b in palabra.valores)
    return palabra.texto()


def entradas_tabla(mapa: TipoMapa) -> List[PalabraAnillo]:
    if mapa.nombre == NombreMapa.PHI:
        return [PalabraAnillo(modulo=Modulo(k=2), valores=(x, y)) for x in range(4) for y in range(4)]
    if mapa.nombre == NombreMapa.PHI_INVERSA:
        return [b.como_palabra_anillo() for b in rm1_codewords(2)]
    return simbolos_dominio(mapa)


def evaluar(mapa: TipoMapa, palabras: List[PalabraAnillo]) -> MapaRespuesta:
    filas = []
    for palabra in palabras:
        imagen = aplicar_mapa(mapa, palabra)
        filas.append(FilaMapaRespuesta(
            entrada=texto_palabra(palabra),
            imagen=texto_palabra(imagen),
            peso_origen=weight(palabra, mapa.metrica_origen),
            peso_destino=weight(imagen, mapa.metrica_destino),
        ))
    return MapaRespuesta(
        mapa=mapa.etiqueta(),
        metrica_origen=mapa.metrica_origen,
        metrica_destino=mapa.metrica_destino,
        filas=filas,
    )


def renderizar(respuesta: MapaRespuesta) -> str:
    encabezados = [
        "entrada",
        ETIQUETAS_PESO[respuesta.metrica_origen],
        "imagen",
        ETIQUETAS_PESO[respuesta.metrica_destino],
    ]
    filas = [(f.entrada, f.peso_origen, f.imagen, f.peso_destino) for f in respuesta.filas]
    return f"{respuesta.mapa}\n" + formatear_tabla(encabezados, filas)


# --- Comando ---

def cmd_map(args: argparse.Namespace) -> int:
    try:
        if args.todo == (args.palabra is not None):
            raise ValueError("Indique una palabra o --all, no ambos")
        mapa = construir_mapa(args.nombre, args.k)
        palabras = entradas_tabla(mapa) if args.todo else [leer_palabra(mapa, args.palabra)]
        respuesta = evaluar(mapa, palabras)
    except ValueError as e:
        error_uso(e)
        return 2

    reporte = Reporte(
        command="map",
        inputs={"map": args.nombre, "k": mapa.k, "word": args.palabra, "all": args.todo},
        results=respuesta.model_dump(mode="json"),
    )
    emitir(reporte, args.json, renderizar(respuesta))
    return 0
