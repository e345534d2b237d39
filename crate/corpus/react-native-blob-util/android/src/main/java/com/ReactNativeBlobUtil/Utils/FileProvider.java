package com.ReactNativeBlobUtil.Utils;

public class FileProvider extends androidx.core.content.FileProvider {
}
