# DAOs/MatrizDAO.py

import logging
import re
from pathlib import Path
from typing import Union

from Modelo.Anillo import Modulo
from Modelo.Codigo import MatrizGeneradora
from Modelo.Errores import ErrorFormato

log = logging.getLogger(__name__)

_CABECERA = re.compile(r"^mod\s+(\d+)\s+rows\s+(\d+)\s+cols\s+(\d+)$")


class MatrizDAO:
    """
    Data Access Object para archivos de matriz generadora en texto plano:

        mod <m> rows <k> cols <n>
        <k líneas de n residuos separados por comas>

    Las líneas vacías y las que empiezan con '#' se ignoran.
    """

    def __init__(self, ruta: Union[str, Path]):
        self.ruta = Path(ruta)

    # ----------------------------
    # Lectura
    # ----------------------------
    def leer(self) -> MatrizGeneradora:
        try:
            texto = self.ruta.read_text(encoding="utf-8")
        except OSError as e:
            raise ErrorFormato(f"No se pudo leer {self.ruta}: {e.strerror or e}") from e
        except UnicodeDecodeError as e:
            linea = e.object[:e.start].count(b"\n") + 1
            raise ErrorFormato(f"{self.ruta} no es texto UTF-8 (byte 0x{e.object[e.start]:02x})", linea) from e
        log.debug("Leyendo matriz desde %s", self.ruta)
        return self.parsear(texto)

    @staticmethod
    def parsear(texto: str) -> MatrizGeneradora:
        lineas = [
            (numero, linea.strip())
            for numero, linea in enumerate(texto.splitlines(), start=1)
            if linea.strip() and not linea.strip().startswith("#")
        ]
        if not lineas:
            raise ErrorFormato("Archivo vacío, falta la cabecera 'mod <m> rows <k> cols <n>'", 1)

        numero, cabecera = lineas[0]
        coincidencia = _CABECERA.match(cabecera)
        if not coincidencia:
            raise ErrorFormato(f"Cabecera inválida '{cabecera}', se esperaba 'mod <m> rows <k> cols <n>'", numero)
        m, k, n = (int(g) for g in coincidencia.groups())
        try:
            modulo = Modulo.desde_m(m)
        except ValueError as e:
            raise ErrorFormato(str(e), numero) from None
        if k < 1 or n < 1:
            raise ErrorFormato("rows y cols deben ser al menos 1", numero)

        filas_texto = lineas[1:]
        if len(filas_texto) != k:
            ultima = filas_texto[-1][0] if filas_texto else numero
            raise ErrorFormato(f"La cabecera declara {k} filas, el archivo tiene {len(filas_texto)}", ultima)

        filas = []
        for numero, linea in filas_texto:
            try:
                fila = tuple(int(parte.strip()) for parte in linea.split(","))
            except ValueError:
                raise ErrorFormato(f"Fila mal formada '{linea}'", numero) from None
            if len(fila) != n:
                raise ErrorFormato(f"Se esperaban {n} columnas, hay {len(fila)}", numero)
            if any(not 0 <= x < m for x in fila):
                raise ErrorFormato(f"Residuo fuera de [0, {m}) en '{linea}'", numero)
            filas.append(fila)

        return MatrizGeneradora(modulo=modulo, filas=tuple(filas))

    # ----------------------------
    # Escritura
    # ----------------------------
    @staticmethod
    def serializar(G: MatrizGeneradora) -> str:
        lineas = [f"mod {G.modulo.m} rows {G.k} cols {G.n}"]
        lineas += [",".join(str(x) for x in fila) for fila in G.filas]
        return "\n".join(lineas) + "\n"

    def guardar(self, G: MatrizGeneradora) -> None:
        self.ruta.parent.mkdir(parents=True, exist_ok=True)
        self.ruta.write_text(self.serializar(G), encoding="utf-8")
        log.info("Matriz %dx%d sobre %s guardada en %s", G.k, G.n, G.modulo, self.ruta)
