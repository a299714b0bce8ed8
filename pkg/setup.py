#!/usr/bin/env python
"""Setup script for braceproducts

To install braceproducts for your user account run:

    $ python setup.py install --user

To install in a custom directory <dir> use:

    $ python setup.py install --prefix=<dir>

Developers: to clean the directory of any extraneous files, such as compiled
Python .pyc output and build directories, run:

    $ python setup.py clean
"""
import os
import shutil

from setuptools import setup, Command

packages = [
    'braceproducts',
    'braceproducts.tests',
    'braceproducts.utilities',
]


class clean(Command):
    """Cleans files so you should get the same copy as in git."""
    description = 'remove build files'
    user_options = [('all', 'a', 'the same')]

    def initialize_options(self):
        self.all = None

    def finalize_options(self):
        pass

    def run(self):
        # delete all files ending with certain extensions
        # currently: '.pyc', '~'
        dir_setup = os.path.dirname(os.path.realpath(__file__))
        for root, dirs, files in os.walk(dir_setup):
            for file in files:
                file = os.path.join(root, file)
                if file.endswith(('.pyc', '~')) and os.path.isfile(file):
                    print('deleting %s...' % file)
                    os.remove(file)

        # explicity remove files and directories from 'blacklist'
        blacklist = ['build', 'dist', 'braceproducts.egg-info']
        for file in blacklist:
            file = os.path.join(dir_setup, file)
            if os.path.isfile(file):
                print('deleting %s...' % file)
                os.remove(file)
            elif os.path.isdir(file):
                print('deleting %s...' % file)
                shutil.rmtree(file)


# configure setup
exec(open('braceproducts/version.py').read())
setup(
    name='braceproducts',
    version=__version__,
    description='Brace products of fibrations with section, their '
                'splittings and the J-homomorphism.',
    license='MIT',
    packages=packages,
    package_data={'braceproducts': ['data/*.json']},
    python_requires='>=3.6',
    install_requires=['sympy', 'numpy'],
    extras_require={'parallel': ['pytest', 'pytest-xdist']},
    entry_points={
        'console_scripts': ['braceproducts = braceproducts.cli:main'],
    },
    platforms=['all'],
    cmdclass={'clean': clean},
)
