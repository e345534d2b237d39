package cl.json;

import androidx.core.content.FileProvider;

public class RNShareFileProvider extends FileProvider {

}
