#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Controlador del subcomando `verify`: ejecuta la suite completa y devuelve
0 si todos los chequeos pasan, 1 en caso contrario.
"""

import argparse
from typing import List

from pydantic import BaseModel

from Controlador.Reporte import Reporte, emitir, formatear_tabla
from Modelo.Verificacion import Chequeo
from Servicios.VerificacionServicio import VerificacionServicio


class VerificacionRespuesta(BaseModel):
    chequeos: List[Chequeo]
    aprobados: int
    fallidos: int


def registrar(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="Ejecuta todos los chequeos exhaustivos")
    parser.add_argument("--json", action="store_true", help="Salida JSON")
    parser.set_defaults(funcion=cmd_verify)


def get_verificacion_servicio() -> VerificacionServicio:
    return VerificacionServicio()


def renderizar(r: VerificacionRespuesta) -> str:
    tabla = formatear_tabla(
        ["chequeo", "estado", "detalle"],
        [(c.nombre, "OK" if c.ok else "FALLA", c.detalle) for c in r.chequeos],
    )
    return f"{tabla}\n\n{r.aprobados} aprobados, {r.fallidos} fallidos"


def cmd_verify(args: argparse.Namespace) -> int:
    chequeos = get_verificacion_servicio().ejecutar()
    fallidos = sum(1 for c in chequeos if not c.ok)
    respuesta = VerificacionRespuesta(
        chequeos=chequeos,
        aprobados=len(chequeos) - fallidos,
        fallidos=fallidos,
    )
    reporte = Reporte(command="verify", inputs={}, results=respuesta.model_dump(mode="json"))
    emitir(reporte, args.json, renderizar(respuesta))
    return 1 if fallidos else 0
